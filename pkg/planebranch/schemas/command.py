from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from planebranch.schemas.common import OutputMode


class Verb(str, Enum):
    INVARIANTS = "invariants"
    SEMIGROUP = "semigroup"
    PARAM = "param"
    PREPARE = "prepare"
    CHECK = "check"
    CORPUS = "corpus"


class CheckKind(str, Enum):
    GORENSTEIN = "gorenstein"
    DELGADO = "delgado"
    KEY = "key"
    MAIN = "main"
    MILNOR_FORMULA = "milnor-formula"
    MU_STABLE = "mu-stable"
    COUNTING = "counting"
    CONDUCTOR = "conductor"
    UNIT_PROBE = "unit-probe"


# Checks that take several branches instead of one expression
FACTOR_CHECKS = {CheckKind.MILNOR_FORMULA}


class Command(BaseModel):
    """A parsed command line"""

    verb: Verb
    check: Optional[CheckKind] = None
    field: str = Field("QQ", description="GF(p), GF(p^k) or QQ")
    ext: Optional[int] = Field(None, ge=1)
    precision: Optional[int] = Field(None, ge=4)
    lmax: Optional[int] = Field(None, ge=1)
    workers: Optional[int] = Field(None, ge=1)
    expression: Optional[str] = None
    g_expression: Optional[str] = None
    factors: List[str] = Field(default_factory=list)
    corpus: Optional[str] = None
    output: OutputMode = OutputMode.TEXT

    @model_validator(mode="after")
    def arguments_complete(self) -> "Command":
        if self.verb == Verb.CORPUS:
            if not self.corpus:
                raise ValueError("corpus needs --corpus FILE")
            return self
        if self.verb == Verb.CHECK:
            if self.check is None:
                raise ValueError("check needs a check name")
            if self.check in FACTOR_CHECKS:
                if not self.factors:
                    raise ValueError(f"check {self.check.value} needs --factors FILE")
                return self
            if self.check == CheckKind.DELGADO and not self.g_expression:
                raise ValueError("check delgado needs --g EXPR")
        if not self.expression:
            raise ValueError(f"{self.verb.value} needs an expression")
        return self
