import pytest

from planebranch.kernel.keytheorem import (
    adic_expansion,
    approximate_root,
    bracket,
    build_tower,
    check_bracket_inequality,
    degree_reduce,
    key_decompose,
    key_family,
    membership_threshold,
    q_element,
    recompose,
    split_value_identity,
    verify_key_theorem,
    vmodule_decompose,
)
from planebranch.kernel.localideal import certified_basis, jacobian_ideal
from planebranch.kernel.semigroup import ValueSemigroup
from planebranch.utils.errors import CharacteristicDividesIndex, HypothesisViolated, InvalidInput, NotTame
from tests.helpers import poly


def test_bracket_is_jacobian_determinant():
    f = poly("Y^2-X^3", 7)
    assert bracket(f, poly("X", 7)) == poly("-2*Y", 7)
    assert bracket(f, poly("Y", 7)) == poly("-3*X^2", 7)
    assert bracket(f, f).is_zero()


def test_adic_expansion_digits():
    root = poly("Y^2-X^3", 7)
    digits = adic_expansion(poly("(Y^2-X^3)^2+X*Y", 7), root)
    assert digits == [poly("X*Y", 7), poly("0", 7), poly("1", 7)]


def test_approximate_root(genus2_f7):
    assert approximate_root(genus2_f7, 2) == poly("Y^2-X^3", 7)
    assert approximate_root(genus2_f7, 4) == poly("Y", 7)
    assert approximate_root(genus2_f7, 1) == genus2_f7


def test_approximate_root_characteristic_divides_index():
    with pytest.raises(CharacteristicDividesIndex):
        approximate_root(poly("Y^2-X^3", 2), 2)


def test_approximate_root_needs_divisor():
    with pytest.raises(InvalidInput):
        approximate_root(poly("Y^3-X^4", 7), 2)


def test_tower_values(genus2_f7):
    tower = build_tower(genus2_f7)
    assert tower.values == [4, 6, 25]
    assert tower.roots[1] == poly("Y", 7)
    assert tower.roots[2] == poly("Y^2-X^3", 7)
    assert tower.level_semigroup(1).generators == (2, 3)


def test_tower_requires_monic():
    with pytest.raises(InvalidInput):
        build_tower(poly("3*Y^2-X^3", 7))


def test_cusp_key_theorem(cusp7):
    tower = build_tower(cusp7)
    verdict = verify_key_theorem(tower)
    assert [row.s for row in verdict.rows] == [2, 3]
    assert [row.intersection for row in verdict.rows] == [3, 4]
    assert verdict.mu == 2
    assert verdict.rank == 2
    assert verdict.threshold == 7
    assert verdict.passed
    assert verdict.failures() == []


def test_q_elements_of_cusp(cusp7):
    tower = build_tower(cusp7)
    assert q_element(tower, 2).value == poly("-2*Y", 7)
    assert q_element(tower, 3).value == poly("-3*X^2", 7)


def test_key_family_size_is_conductor():
    tower = build_tower(poly("Y^3-X^5", 7))
    family = key_family(tower)
    assert len(family) == 8
    assert family[0] == (0, poly("1", 7))


def test_membership_threshold(cusp7):
    sb = certified_basis(jacobian_ideal(cusp7))
    assert membership_threshold(sb, ValueSemigroup((2, 3))) == 7


def test_key_decompose_finds_coordinates(cusp7):
    tower = build_tower(cusp7)
    coefficients = key_decompose(poly("2+X+Y", 7), tower)
    assert coefficients == [2, 1]


def test_bracket_inequality_rows(cusp7):
    rows = check_bracket_inequality(build_tower(cusp7))
    assert [row["value"] for row in rows] == [3, 4]
    assert all(row["holds"] for row in rows)


def test_wild_semigroup_is_rejected():
    tower = build_tower(poly("Y^3-X^10", 5))
    with pytest.raises(NotTame):
        verify_key_theorem(tower)


def test_vmodule_decomposition_recomposes(genus2_f7):
    tower = build_tower(genus2_f7)
    h = poly("Y^3+X*Y^2+X^5*Y+X^2", 7)
    split = vmodule_decompose(h, tower)
    assert recompose(tower, split.coefficients) == h
    assert split.quotient * tower.root(1) + split.remainder == h


def test_vmodule_rejects_high_degree(genus2_f7):
    with pytest.raises(InvalidInput):
        vmodule_decompose(genus2_f7, build_tower(genus2_f7))


def test_degree_reduce_rejects_divisible_m(cusp7):
    with pytest.raises(HypothesisViolated):
        degree_reduce(build_tower(cusp7), poly("X", 7), 4)


@pytest.mark.slow
def test_genus_two_key_theorem(genus2_f7):
    verdict = verify_key_theorem(build_tower(genus2_f7))
    assert verdict.mu == 28
    assert verdict.rank == 28
    assert verdict.passed


@pytest.mark.slow
def test_genus_two_small_characteristic():
    verdict = verify_key_theorem(build_tower(poly("(Y^2-X^3)^2-X^5*Y", 5)))
    assert verdict.mu == 16
    assert verdict.passed


def test_value_identity_for_split(genus2_f7):
    tower = build_tower(genus2_f7)
    upper, lower = split_value_identity(tower, poly("Y^3+X^4", 7))
    assert upper == lower == 6
