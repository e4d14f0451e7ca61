import pytest

from planebranch.kernel.algebra import BivariatePolynomial
from planebranch.kernel.localideal import ideal_colength, jacobian_ideal
from planebranch.kernel.prep import RecordedAutomorphism, apply_automorphism, is_weierstrass, levinson_prepare, weierstrass_by_coords
from planebranch.utils.errors import CharacteristicDividesR, NoPureYTerm, NoRootInField
from tests.helpers import poly


def test_levinson_shape():
    f = poly("Y^2+Y^3-X^3", 7)
    phi, prepared = levinson_prepare(f)
    assert prepared.degree == 2
    assert prepared.poly.leading_y_coefficient().coefficient(0, 0) != 0
    assert prepared.poly.coefficient(0, 0) == 0
    assert prepared.poly.coefficient(0, 1) == 0
    assert phi.image_x == BivariatePolynomial.x(f.spec)


def test_levinson_identity_when_already_prepared(cusp7):
    phi, prepared = levinson_prepare(cusp7)
    assert phi.is_identity()
    assert prepared.poly == cusp7


def test_levinson_needs_pure_power():
    with pytest.raises(NoPureYTerm):
        levinson_prepare(poly("X*Y-X^3", 7))


def test_levinson_characteristic_divides_r():
    with pytest.raises(CharacteristicDividesR):
        levinson_prepare(poly("Y^7+X*Y^8-X^8", 7))


def test_weierstrass_form():
    _, result = weierstrass_by_coords(poly("Y^2+Y^3-X^3", 7))
    assert result.degree == 2
    assert is_weierstrass(result)


def test_weierstrass_moves_tangent():
    phi, result = weierstrass_by_coords(poly("(Y-X)^2-X^3", 7))
    assert is_weierstrass(result)
    assert not phi.is_identity()


def test_weierstrass_needs_root_of_leading_coefficient():
    with pytest.raises(NoRootInField) as info:
        weierstrass_by_coords(poly("3*Y^2-X^3", 7))
    assert info.value.suggested_extension == 2


def test_weierstrass_over_extension():
    _, result = weierstrass_by_coords(poly("3*Y^2-X^3", 7, 2))
    assert is_weierstrass(result)


def test_milnor_number_invariant_under_automorphism(cusp7):
    x = BivariatePolynomial.x(cusp7.spec)
    y = BivariatePolynomial.y(cusp7.spec)
    phi = RecordedAutomorphism(x + y, y + x.pow(2))
    moved = apply_automorphism(phi, cusp7)
    assert ideal_colength(jacobian_ideal(moved)) == 2
    assert phi.jacobian() == 1


def test_weierstrass_rescale_keeps_exact_coefficients_within_precision():
    _, result = weierstrass_by_coords(poly("Y^3+X*Y^3-X^31", 7), 40)
    assert result.poly == poly("Y^3-X^31", 7)
    assert result.x_precision == 40


def test_levinson_precision_follows_requested_x_precision():
    _, result = weierstrass_by_coords(poly("Y^2+Y^3-X^25", 7), 30)
    assert is_weierstrass(result)
    assert result.x_precision == 30
    assert result.poly.coefficient(25, 0) != 0
