import pytest

from planebranch.kernel.field import FieldElement, FieldSpec, field_arith
from planebranch.utils.errors import DivisionByZero, FieldMismatch, FieldSpecError, NoRootInField


def test_parse_prime_field():
    spec = FieldSpec.parse("GF(7)")
    assert spec.characteristic == 7
    assert spec.extension_degree == 1
    assert str(spec) == "GF(7)"


def test_parse_prime_power_forms():
    assert FieldSpec.parse("GF(9)") == FieldSpec(3, 2)
    assert FieldSpec.parse("GF(3^2)") == FieldSpec(3, 2)
    assert FieldSpec.parse("QQ").characteristic == 0


def test_parse_rejects_non_prime_power():
    with pytest.raises(FieldSpecError):
        FieldSpec.parse("GF(6)")
    with pytest.raises(FieldSpecError):
        FieldSpec.parse("F7")


def test_prime_field_arithmetic(gf7):
    assert gf7.add(5, 4) == 2
    assert gf7.mul(3, 5) == 1
    assert gf7.inv(3) == 5
    assert gf7.from_int(-1) == 6


def test_division_by_zero(gf7):
    with pytest.raises(DivisionByZero):
        gf7.inv(0)


def test_extension_field_inverse():
    spec = FieldSpec(3, 2)
    nonzero = [a for a in spec.elements() if a]
    assert len(nonzero) == 8
    for a in nonzero:
        assert spec.mul(a, spec.inv(a)) == spec.one


def test_frobenius_root_extension():
    spec = FieldSpec(5, 2)
    for a in spec.elements():
        assert spec.pow(spec.frobenius_root(a), 5) == a


def test_field_arith_same_field(gf7):
    a = FieldElement(gf7, 3)
    b = FieldElement(gf7, 4)
    assert field_arith(a, b, "add").value == 0
    assert field_arith(a, b, "div").value == gf7.mul(3, gf7.inv(4))


def test_field_arith_mismatch(gf7):
    with pytest.raises(FieldMismatch):
        field_arith(FieldElement(gf7, 1), FieldElement(FieldSpec(5), 1), "mul")


def test_nth_root_and_suggested_extension(gf7):
    root = gf7.nth_root(2, 2)
    assert gf7.pow(root, 2) == 2
    assert not gf7.has_nth_root(3, 2)
    assert gf7.minimal_root_extension(3, 2) == 2
    with pytest.raises(NoRootInField) as info:
        gf7.nth_root(3, 2)
    assert info.value.suggested_extension == 2


def test_p_th_roots_always_exist():
    spec = FieldSpec(3, 2)
    for a in spec.elements():
        assert spec.has_nth_root(a, 3)
