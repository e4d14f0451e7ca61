import pytest

from planebranch.kernel.field import FieldSpec
from planebranch.services.parser_service import ParserService, tokenize
from planebranch.utils.errors import DivisionByZero, ExpressionSyntaxError, FieldMismatch, UnknownSymbolError
from tests.helpers import poly

parser = ParserService()


def test_tokenize_maps_double_star():
    kinds = [(kind, value) for kind, value, _ in tokenize("X**2")]
    assert kinds == [("name", "X"), ("op", "^"), ("int", "2"), ("end", "")]


def test_printed_polynomial_parses_back():
    f = poly("(Y^2-X^3)^2-Y*X^11", 7)
    assert poly(f.to_str(), 7) == f


def test_extension_generator_round_trip():
    spec = FieldSpec(5, 2)
    f = parser.parse_expression("u*X^2+(u+1)*Y^3", spec)
    assert parser.parse_expression(f.to_str(), spec) == f


def test_generator_needs_extension():
    with pytest.raises(UnknownSymbolError):
        poly("u*X", 7)


def test_division_by_constant():
    assert poly("X/2", 7) == poly("4*X", 7)
    assert poly("X/3+Y", 0) == poly("Y+X/3", 0)


def test_division_by_polynomial_rejected():
    with pytest.raises(ExpressionSyntaxError):
        poly("1/X", 7)


def test_division_by_zero_constant():
    with pytest.raises(DivisionByZero):
        poly("X/7", 7)


def test_implicit_multiplication_reports_position():
    with pytest.raises(ExpressionSyntaxError) as info:
        poly("2X+Y", 7)
    assert info.value.position == 1
    with pytest.raises(ExpressionSyntaxError) as info:
        poly("(X+1)(Y+1)", 7)
    assert info.value.position == 5


def test_unknown_symbol():
    with pytest.raises(UnknownSymbolError) as info:
        poly("Z+X", 7)
    assert info.value.details["symbol"] == "Z"


def test_unbalanced_and_empty():
    with pytest.raises(ExpressionSyntaxError):
        poly("(X+Y", 7)
    with pytest.raises(ExpressionSyntaxError):
        poly("   ", 7)
    with pytest.raises(ExpressionSyntaxError):
        poly("X+#", 7)


def test_literal_reducing_to_zero_is_noted():
    spec = FieldSpec(5)
    f, notes = parser.parse_expression_with_notes("5*X+Y", spec)
    assert f == poly("Y", 5)
    assert notes == ["5"]


def test_parse_field_with_extension():
    assert parser.parse_field("GF(7)", 2) == FieldSpec(7, 2)
    assert parser.parse_field("GF(49)", 2) == FieldSpec(7, 2)
    with pytest.raises(FieldMismatch):
        parser.parse_field("GF(49)", 3)


def test_parse_factors_skips_comments():
    lines = ["# two smooth branches", "Y-X^2", "", "Y+X^2"]
    assert parser.parse_factors(lines, FieldSpec(7)) == [poly("Y-X^2", 7), poly("Y+X^2", 7)]
