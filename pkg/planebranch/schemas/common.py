from enum import Enum
from typing import Any, Dict, Optional, Union

from pydantic import BaseModel, Field

from planebranch.kernel.values import is_infinite

INFINITE_TEXT = "infinite"

CountOut = Union[int, str]


def count_out(value: Any) -> Optional[CountOut]:
    """Infinite values serialize as the string "infinite" """
    if value is None:
        return None
    return INFINITE_TEXT if is_infinite(value) else int(value)


class OutputMode(str, Enum):
    """Report rendering"""

    TEXT = "text"
    JSON = "json"


class CheckOutcome(BaseModel):
    """A named identity check with its witness"""

    name: str
    passed: bool
    skipped: bool = Field(False, description="Hypotheses not met; nothing was tested")
    witness: Dict[str, Any] = Field(default_factory=dict, description="Both sides of the identity")

    class Config:
        json_schema_extra = {
            "example": {"name": "gorenstein", "passed": True, "skipped": False, "witness": {"v_fy": 3, "c_plus_v_dx": 3}}
        }


class ErrorResponse(BaseModel):
    """Error envelope written in JSON mode"""

    code: str
    message: str
    details: Optional[Any] = None
