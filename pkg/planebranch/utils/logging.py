import logging
from typing import Optional

from planebranch.config import settings

_configured = False


def setup_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> None:
    """Configure the root handler once"""
    global _configured
    level_name = (level or settings.log_level).upper()
    if _configured:
        logging.getLogger().setLevel(level_name)
        return
    logging.basicConfig(level=level_name, format=fmt or settings.log_format)
    _configured = True


def verbosity_to_level(verbose: int) -> str:
    if verbose >= 2:
        return "DEBUG"
    if verbose == 1:
        return "INFO"
    return settings.log_level
