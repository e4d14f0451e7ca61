from typing import Any, Dict, List, Optional

# Exit codes shared by every error and by the CLI
EXIT_OK = 0
EXIT_PARSE = 2
EXIT_EXHAUSTED = 3
EXIT_UNSUPPORTED = 4
EXIT_FALSIFIED = 5


class BranchError(Exception):
    """Base error class"""

    def __init__(self, code: str, message: str, exit_code: int, details: Optional[Any] = None):
        self.code = code
        self.message = message
        self.exit_code = exit_code
        self.details = details
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        payload = {"code": self.code, "message": self.message}
        if self.details is not None:
            payload["details"] = self.details
        return payload


# Parse errors (exit 2)


class ExpressionSyntaxError(BranchError):
    def __init__(self, text: str, position: int, issue: str):
        details = {"text": text, "position": position, "issue": issue}
        super().__init__(
            code="EXPRESSION_SYNTAX",
            message=f"Cannot parse expression at position {position}: {issue}",
            exit_code=EXIT_PARSE,
            details=details,
        )
        self.position = position


class UnknownSymbolError(BranchError):
    def __init__(self, symbol: str, allowed: List[str]):
        super().__init__(
            code="UNKNOWN_SYMBOL",
            message=f"Unknown symbol {symbol!r}",
            exit_code=EXIT_PARSE,
            details={"symbol": symbol, "allowed": allowed},
        )


class FieldSpecError(BranchError):
    def __init__(self, text: str, issue: str):
        super().__init__(
            code="FIELD_SPEC_NOT_VALID",
            message=f"Field specification {text!r} is not valid: {issue}",
            exit_code=EXIT_PARSE,
            details={"text": text, "issue": issue},
        )


# Exhausted budgets (exit 3)


class PrecisionExhausted(BranchError):
    def __init__(self, what: str, precision: int, needed: Optional[int] = None):
        details = {"what": what, "precision": precision}
        if needed is not None:
            details["needed"] = needed
        super().__init__(
            code="PRECISION_EXHAUSTED",
            message=f"Precision {precision} is not enough to decide {what}",
            exit_code=EXIT_EXHAUSTED,
            details=details,
        )
        self.precision = precision


class BoundExhausted(BranchError):
    def __init__(self, what: str, bound: int):
        super().__init__(
            code="BOUND_EXHAUSTED",
            message=f"Degree bound {bound} is not enough to decide {what}",
            exit_code=EXIT_EXHAUSTED,
            details={"what": what, "bound": bound},
        )
        self.bound = bound


# Unsupported input (exit 4)


class UnsupportedInput(BranchError):
    """Common parent of every input the kernel refuses"""

    def __init__(self, code: str, message: str, details: Optional[Any] = None):
        super().__init__(code=code, message=message, exit_code=EXIT_UNSUPPORTED, details=details)


class DivisionByZero(UnsupportedInput):
    def __init__(self, where: str = "field"):
        super().__init__("DIVISION_BY_ZERO", f"Division by zero in {where}", {"where": where})


class FieldMismatch(UnsupportedInput):
    def __init__(self, left: str, right: str):
        super().__init__(
            "FIELD_MISMATCH",
            f"Operands live in different fields: {left} and {right}",
            {"left": left, "right": right},
        )


class UnsupportedInCharZero(UnsupportedInput):
    def __init__(self, operation: str):
        super().__init__(
            "UNSUPPORTED_IN_CHAR_ZERO",
            f"{operation} needs a positive characteristic",
            {"operation": operation},
        )


class NotAUnit(UnsupportedInput):
    def __init__(self, what: str = "series"):
        super().__init__("NOT_A_UNIT", f"The {what} has no invertible constant term", {"what": what})


class NoRootInField(UnsupportedInput):
    def __init__(self, degree: int, field: str, suggested_extension: Optional[int] = None):
        details = {"degree": degree, "field": field}
        if suggested_extension is not None:
            details["suggestedExtension"] = suggested_extension
        super().__init__(
            "NO_ROOT_IN_FIELD",
            f"No {degree}-th root exists in {field}",
            details,
        )
        self.degree = degree
        self.suggested_extension = suggested_extension


class LeadingCoefficientNotUnit(UnsupportedInput):
    def __init__(self):
        super().__init__(
            "LEADING_COEFFICIENT_NOT_UNIT",
            "Divisor leading coefficient is not a unit series",
        )


class CommonFactor(UnsupportedInput):
    def __init__(self, what: str = "resultant"):
        super().__init__("COMMON_FACTOR", f"Inputs share a common factor ({what} vanishes)", {"what": what})


class NotPrimary(UnsupportedInput):
    def __init__(self):
        super().__init__("NOT_PRIMARY", "Ideal is not primary to the maximal ideal")


class NotIsolated(UnsupportedInput):
    def __init__(self):
        super().__init__("NOT_ISOLATED", "Singularity is not isolated (Tjurina ideal has infinite colength)")


class NotReduced(UnsupportedInput):
    def __init__(self, stage: int):
        super().__init__("NOT_REDUCED", "Equation is not reduced", {"stage": stage})


class Reducible(UnsupportedInput):
    def __init__(self, stage: int, multiplicity: int):
        super().__init__(
            "REDUCIBLE",
            f"Curve splits at blowup stage {stage} (multiplicity {multiplicity})",
            {"stage": stage, "multiplicity": multiplicity},
        )
        self.stage = stage


class CharacteristicDividesIndex(UnsupportedInput):
    def __init__(self, index: int, characteristic: int):
        super().__init__(
            "CHARACTERISTIC_DIVIDES_INDEX",
            f"Characteristic {characteristic} divides the root index {index}",
            {"index": index, "characteristic": characteristic},
        )


class CharacteristicDividesR(UnsupportedInput):
    def __init__(self, r: int, characteristic: int):
        super().__init__(
            "CHARACTERISTIC_DIVIDES_R",
            f"Characteristic {characteristic} divides the pure Y order {r}",
            {"r": r, "characteristic": characteristic},
        )


class CharacteristicDividesMultiplicity(UnsupportedInput):
    def __init__(self, multiplicity: int, characteristic: int):
        super().__init__(
            "CHARACTERISTIC_DIVIDES_MULTIPLICITY",
            f"Characteristic {characteristic} divides the multiplicity {multiplicity}",
            {"multiplicity": multiplicity, "characteristic": characteristic},
        )


class NoPureYTerm(UnsupportedInput):
    def __init__(self):
        super().__init__("NO_PURE_Y_TERM", "f(0, Y) vanishes identically")


class NotInSemigroup(UnsupportedInput):
    def __init__(self, value: int, generators: List[int]):
        super().__init__(
            "NOT_IN_SEMIGROUP",
            f"{value} is not an element of <{', '.join(map(str, generators))}>",
            {"value": value, "generators": generators},
        )


class HypothesisViolated(UnsupportedInput):
    def __init__(self, hypothesis: str, details: Optional[Dict[str, Any]] = None):
        super().__init__("HYPOTHESIS_VIOLATED", f"Hypothesis violated: {hypothesis}", details)


class NotTame(UnsupportedInput):
    def __init__(self, generators: List[int], characteristic: int):
        super().__init__(
            "NOT_TAME",
            f"Characteristic {characteristic} divides a generator of <{', '.join(map(str, generators))}>",
            {"generators": generators, "characteristic": characteristic},
        )


class InvalidInput(UnsupportedInput):
    def __init__(self, issue: str, details: Optional[Any] = None):
        super().__init__("INPUT_NOT_VALID", issue, details)


# Falsified identities (exit 5)


class TowerInvariantViolated(BranchError):
    def __init__(self, index: int, expected: Any, found: Any):
        super().__init__(
            code="TOWER_INVARIANT_VIOLATED",
            message=f"Approximate root f_{index} breaks the tower invariant",
            exit_code=EXIT_FALSIFIED,
            details={"index": index, "expected": expected, "found": found},
        )


class SemigroupDisagreement(BranchError):
    def __init__(self, by_subduction: List[int], by_multiplicities: List[int]):
        super().__init__(
            code="SEMIGROUP_DISAGREEMENT",
            message="Valuation subduction and multiplicity sequence give different semigroups",
            exit_code=EXIT_FALSIFIED,
            details={"subduction": by_subduction, "multiplicities": by_multiplicities},
        )
