from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, model_validator


class CorpusEntry(BaseModel):
    """One line of a corpus file"""

    name: Optional[str] = None
    field: str
    ext: Optional[int] = None
    expr: Optional[str] = None
    factors: Optional[List[str]] = None
    g: Optional[str] = Field(None, description="Second curve for delgado and intersection keys")
    expected: Dict[str, Any] = Field(default_factory=dict)
    record_only: List[str] = Field(default_factory=list, description="Keys reported but never counted as failures")

    @model_validator(mode="after")
    def one_input(self) -> "CorpusEntry":
        if bool(self.expr) == bool(self.factors):
            raise ValueError("exactly one of expr and factors is required")
        unknown = set(self.record_only) - set(self.expected)
        if unknown:
            raise ValueError(f"record_only names keys without expectations: {sorted(unknown)}")
        return self


class Mismatch(BaseModel):
    key: str
    expected: Any
    found: Any
    record_only: bool = False


class CorpusResult(BaseModel):
    index: int
    name: Optional[str] = None
    passed: bool
    observed: Dict[str, Any] = Field(default_factory=dict)
    mismatches: List[Mismatch] = Field(default_factory=list)
    recorded: List[Mismatch] = Field(default_factory=list)
    error: Optional[Dict[str, Any]] = None


class CorpusSummary(BaseModel):
    total: int
    passed: int
    failed: int
    errors: int
    settings: Dict[str, Any] = Field(default_factory=dict)
    results: List[CorpusResult] = Field(default_factory=list)

    class Config:
        json_schema_extra = {"example": {"total": 0, "passed": 0, "failed": 0, "errors": 0, "results": []}}
