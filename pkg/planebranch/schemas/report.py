from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from planebranch.schemas.common import CheckOutcome, CountOut


class SemigroupSummary(BaseModel):
    """Value semigroup of a branch"""

    generators: List[int]
    conductor: int
    genus: int
    tame: bool
    symmetric: bool
    delta: int
    multiplicity_sequence: List[int] = Field(default_factory=list)
    characteristic_exponents: List[int] = Field(default_factory=list)
    apery: List[int] = Field(default_factory=list)

    @field_validator("generators")
    @classmethod
    def generators_positive(cls, value: List[int]) -> List[int]:
        if not value or any(v <= 0 for v in value):
            raise ValueError("generators must be positive")
        return value


class InvariantReport(BaseModel):
    """Invariant suite for one equation"""

    model_config = ConfigDict(extra="forbid")

    char: int = Field(..., description="Characteristic of the base field")
    ext: int = Field(1, description="Extension degree over the prime field")
    poly: str
    irreducible: bool
    mu: Optional[CountOut] = Field(None, description="Milnor number, or \"infinite\"")
    tau: Optional[CountOut] = Field(None, description="Tjurina number")
    e0_tjurina: Optional[int] = Field(None, description="Hilbert-Samuel multiplicity of the Tjurina ideal")
    delta: Optional[int] = None
    semigroup: Optional[List[int]] = None
    conductor: Optional[int] = None
    tame: Optional[bool] = None
    mu_stable_at: Optional[int] = Field(None, description="Least l with f^l in M T(f)^l; null if unknown")
    checks: Dict[str, CheckOutcome] = Field(default_factory=dict)
    wild_gap: Optional[int] = Field(None, description="mu - c when both are finite")

    @field_validator("mu", "tau")
    @classmethod
    def count_or_infinite(cls, value):
        if isinstance(value, str) and value != "infinite":
            raise ValueError("counts are integers or \"infinite\"")
        return value


class PairIntersection(BaseModel):
    i: int
    j: int
    value: CountOut


class MilnorFormulaReport(BaseModel):
    """mu(f_1 ... f_r) against 2 delta + 1 - r"""

    mu: CountOut
    two_delta_plus: int = Field(..., description="2 delta + 1 - r")
    equal: bool
    r: int
    delta: int
    branch_deltas: List[int]
    intersections: List[PairIntersection]
    all_tame: bool
    p_divides_intersection: bool
    e0_tjurina: Optional[int] = None


class KeyRow(BaseModel):
    """One q_s of the key-theorem verification"""

    s: int
    intersection: CountOut
    expected: int
    degree: int
    member: bool
    passed: bool


class KeyTheoremReport(BaseModel):
    mu: CountOut
    conductor: int
    rank: int
    threshold: int
    tower: List[str]
    rows: List[KeyRow]
    brackets: List[Dict] = Field(default_factory=list)
    passed: bool
    failures: List[str] = Field(default_factory=list)


class UnitProbeRow(BaseModel):
    unit: str
    mu: CountOut


class PreparedOutput(BaseModel):
    """Weierstrass form reached by coordinate changes only"""

    automorphism: Dict[str, Optional[str]]
    polynomial: str
    degree: int
    x_precision: Optional[int] = None
    weierstrass: bool
    mu: Optional[CountOut] = None


class ParametrizationOutput(BaseModel):
    x: str
    y: str
    precision: int
    multiplicity_sequence: List[int]
    transversal: str
    order_pair: List[Optional[int]]
