import pytest

from planebranch.kernel.branch import Branch, blowup_chain, check_parametrization, hn_expand, is_irreducible, tangent_data
from planebranch.kernel.values import INFINITE
from planebranch.utils.errors import InvalidInput, Reducible
from tests.helpers import poly


def test_cusp_multiplicity_sequence(cusp7):
    assert Branch(cusp7).multiplicity_sequence() == [2, 1, 1]


def test_higher_multiplicity_sequence():
    assert Branch(poly("Y^3-X^11", 7)).multiplicity_sequence() == [3, 3, 3, 2, 1, 1]


def test_tangent_line():
    data = tangent_data(poly("(Y-2*X)^2-X^3", 7))
    assert data.multiplicity == 2
    assert data.theta == 2
    assert not data.is_split


def test_irreducibility():
    assert is_irreducible(poly("Y^2-X^3", 5))
    assert is_irreducible(poly("Y-X^2", 5))
    assert not is_irreducible(poly("X*Y", 5))
    assert not is_irreducible(poly("Y^2", 5))
    assert not is_irreducible(poly("Y^2-X^4", 5))


def test_reducible_chain_raises():
    with pytest.raises(Reducible):
        blowup_chain(poly("Y^2-X^2", 7))


def test_unit_is_rejected():
    with pytest.raises(InvalidInput):
        blowup_chain(poly("1+X", 7))


def test_parametrization_satisfies_equation(genus2_f7):
    chain, par = hn_expand(genus2_f7)
    assert chain.multiplicity == 4
    assert check_parametrization(par)


def test_cusp_intersections(cusp7):
    branch = Branch(cusp7)
    assert branch.valuation(poly("Y", 7)) == 3
    assert branch.valuation(poly("X", 7)) == 2
    assert branch.valuation(poly("1+X", 7)) == 0
    assert branch.valuation(cusp7) is INFINITE


def test_intersection_of_two_branches():
    f = poly("(Y^2-X^3)^2-X^11*Y", 7)
    g = poly("(Y^2-X^3+X^2*Y)^2-X^11*Y", 7)
    assert Branch(f).valuation(g) == 28


def test_wild_branch_still_parametrizes(genus2_f5):
    branch = Branch(genus2_f5)
    assert branch.multiplicity == 4
    assert branch.valuation(poly("Y^2-X^3", 5)) == 25
