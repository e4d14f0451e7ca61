from planebranch.kernel.field import FieldSpec
from planebranch.services.parser_service import parse_expression


def gf(p: int, k: int = 1) -> FieldSpec:
    return FieldSpec(p, k)


def poly(text: str, p: int = 0, k: int = 1):
    return parse_expression(text, FieldSpec(p, k))
