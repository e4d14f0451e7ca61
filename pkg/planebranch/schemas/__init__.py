from .command import CheckKind, Command, Verb
from .common import CheckOutcome, ErrorResponse, OutputMode, count_out
from .corpus import CorpusEntry, CorpusResult, CorpusSummary, Mismatch
from .report import (
    InvariantReport,
    KeyRow,
    KeyTheoremReport,
    MilnorFormulaReport,
    PairIntersection,
    ParametrizationOutput,
    PreparedOutput,
    SemigroupSummary,
    UnitProbeRow,
)

__all__ = [
    "CheckKind",
    "Command",
    "Verb",
    "CheckOutcome",
    "ErrorResponse",
    "OutputMode",
    "count_out",
    "CorpusEntry",
    "CorpusResult",
    "CorpusSummary",
    "Mismatch",
    "InvariantReport",
    "KeyRow",
    "KeyTheoremReport",
    "MilnorFormulaReport",
    "PairIntersection",
    "ParametrizationOutput",
    "PreparedOutput",
    "SemigroupSummary",
    "UnitProbeRow",
]
