from dataclasses import dataclass
from typing import Any, Dict, Iterable, Tuple

from pydantic import BaseModel

from planebranch.kernel.algebra import UniSeries
from planebranch.utils.errors import EXIT_OK


@dataclass
class CommandResult:
    """What a command hands back to the CLI for rendering"""

    payload: Any
    text: str
    exit_code: int = EXIT_OK

    def as_json_data(self) -> Any:
        if isinstance(self.payload, BaseModel):
            return self.payload.model_dump(mode="json")
        if isinstance(self.payload, list):
            return [p.model_dump(mode="json") if isinstance(p, BaseModel) else p for p in self.payload]
        return self.payload


def render_pairs(title: str, pairs: Iterable[Tuple[str, Any]]) -> str:
    rows = [(str(k), "-" if v is None else str(v)) for k, v in pairs]
    width = max((len(k) for k, _ in rows), default=0)
    body = [f"  {k.ljust(width)}  {v}" for k, v in rows]
    return "\n".join([title] + body)


def render_checks(checks: Dict[str, Any]) -> str:
    lines = []
    for name, outcome in checks.items():
        state = "skipped" if outcome.skipped else ("pass" if outcome.passed else "FAIL")
        lines.append(f"  {name}: {state} {outcome.witness}")
    return "\n".join(["checks"] + lines) if lines else ""


def series_text(series: UniSeries, variable: str = "t") -> str:
    poly = series.to_x_polynomial().to_str().replace("X", variable)
    return f"{poly} + O({variable}^{series.precision})"
