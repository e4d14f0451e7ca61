import random

import pytest

from planebranch.kernel.branch import random_branch_equation
from planebranch.kernel.field import FieldSpec
from planebranch.kernel.localideal import (
    certified_basis,
    colength,
    general_element_e0,
    hilbert_samuel_e0,
    ideal_colength,
    jacobian_ideal,
    macaulay_colength,
    membership,
    mu_stability,
    primary_exponent,
    tjurina_ideal,
)
from planebranch.kernel.values import INFINITE, is_infinite
from planebranch.utils.errors import NotPrimary
from tests.helpers import poly


def test_cusp_milnor_number(cusp7):
    assert ideal_colength(jacobian_ideal(cusp7)) == 2


def test_colength_agrees_with_linear_algebra():
    f = poly("Y^3-X^5", 7)
    gens = jacobian_ideal(f)
    assert ideal_colength(gens) == 8
    assert macaulay_colength(gens, 12) == 8


def test_jacobian_ideal_with_common_factor_is_infinite():
    # Both partials of Y^3+X^4 over GF(3) are multiples of X^3
    assert ideal_colength(jacobian_ideal(poly("Y^3+X^4", 3))) is INFINITE


def test_tjurina_number_of_wild_example():
    assert ideal_colength(tjurina_ideal(poly("Y^3+X^4", 3))) == 9


def test_membership_and_primary_exponent(cusp7):
    sb = certified_basis(jacobian_ideal(cusp7))
    assert membership(poly("X^2", 7), sb)
    assert membership(poly("Y+X^5", 7), sb)
    assert not membership(poly("X", 7), sb)
    assert primary_exponent(sb) == 2


def test_hilbert_samuel_of_complete_intersection():
    assert hilbert_samuel_e0([poly("X^2", 7), poly("Y", 7)]) == 2
    assert hilbert_samuel_e0([poly("X^2", 7), poly("Y^3", 7)]) == 6


def test_hilbert_samuel_rejects_non_primary():
    with pytest.raises(NotPrimary):
        hilbert_samuel_e0([poly("X*Y", 7)])


def test_mu_stability_of_cusp(cusp7):
    result = mu_stability(cusp7, 5)
    assert result.stable_at == 1
    assert str(result) == "StableAt(1)"


def test_general_element_agrees_with_hilbert_samuel(cusp7):
    gens = tjurina_ideal(cusp7)
    assert general_element_e0(gens, trials=4, seed=3) == hilbert_samuel_e0(gens) == 2


@pytest.mark.slow
def test_colength_agrees_with_linear_algebra_on_random_ideals():
    rng = random.Random(23)
    for _ in range(50):
        f = random_branch_equation(rng, FieldSpec(rng.choice([3, 5, 7])), max_n=4, max_m=9)
        gens = tjurina_ideal(f)
        sb = certified_basis(gens)
        tau = colength(sb)
        assert not is_infinite(tau)
        assert macaulay_colength(gens, sb.certificate_degree) == tau, f.to_str()
