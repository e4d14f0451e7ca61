from contextlib import contextmanager
from typing import Any, Iterator

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Engine settings"""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="PLANEBRANCH_",
        case_sensitive=False,
        extra="ignore",
    )

    # Series precision
    default_precision: int = 128
    max_precision_doublings: int = 2

    # Standard bases
    sb_initial_bound: int = 24
    sb_max_doublings: int = 3

    # Hilbert-Samuel multiplicity
    hs_max_power: int = 8
    hs_stable_differences: int = 3
    general_element_trials: int = 6
    general_element_seed: int = 20240601

    # mu-stability
    lmax: int = 6

    # Parametrization / preparation
    max_blowups: int = 256
    prep_precision: int = 24
    max_extension_degree: int = 6

    # Corpus runner
    corpus_workers: int = 4

    # Logging
    log_level: str = "WARNING"
    log_format: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"


# Create settings instance
settings = Settings()


@contextmanager
def override_settings(**updates: Any) -> Iterator[Settings]:
    """Temporarily replace fields of the shared settings instance"""
    updates = {k: v for k, v in updates.items() if v is not None}
    saved = {k: getattr(settings, k) for k in updates}
    for key, value in updates.items():
        setattr(settings, key, value)
    try:
        yield settings
    finally:
        for key, value in saved.items():
            setattr(settings, key, value)
