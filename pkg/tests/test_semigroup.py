import random

import pytest

from planebranch.kernel.branch import Branch
from planebranch.kernel.semigroup import (
    ValueSemigroup,
    characteristic_exponents,
    delta_from_multiplicities,
    random_branch_semigroup,
    semigroup_from_multiplicities,
    semigroup_of,
)
from planebranch.utils.errors import InvalidInput
from tests.helpers import poly


def test_cusp_semigroup(cusp7):
    sg = semigroup_of(Branch(cusp7))
    assert sg.generators == (2, 3)
    assert sg.conductor == 2
    assert sg.gaps() == [1]
    assert sg.is_symmetric()


def test_genus_two_semigroup(genus2_f7):
    sg = semigroup_of(Branch(genus2_f7))
    assert sg.generators == (4, 6, 25)
    assert sg.conductor == 28
    assert sg.n == [1, 2, 2]
    assert sg.is_tame(7)
    assert not sg.is_tame(5)


def test_semigroup_in_wild_characteristic(genus2_f5):
    assert semigroup_of(Branch(genus2_f5)).generators == (4, 6, 25)


def test_apery_and_sweep():
    sg = ValueSemigroup((3, 11))
    assert sg.conductor == 20
    assert sg.apery_set() == [0, 11, 22]
    sweep = sg.sweep_set()
    assert len(sweep) == 20
    assert sweep[:4] == [0, 20, 21, 3]


def test_canonical_representation():
    sg = ValueSemigroup((4, 6, 25))
    assert sg.canonical_representation(31) == (0, 1, 1)
    assert sg.canonical_representation(1) is None


def test_exponents_from_multiplicities():
    assert characteristic_exponents([4, 2, 2, 1, 1]) == [4, 6, 7]
    assert semigroup_from_multiplicities([4, 2, 2, 1, 1]).generators == (4, 6, 13)
    assert semigroup_from_multiplicities([3, 3, 3, 2, 1, 1]).generators == (3, 11)


def test_bad_multiplicity_sequence():
    with pytest.raises(InvalidInput):
        characteristic_exponents([2, 2])


def test_conductor_counts_gaps_on_random_semigroups():
    rng = random.Random(11)
    for _ in range(100):
        sg = random_branch_semigroup(rng, rng.randint(1, 3), 24)
        assert sg.conductor == sg.conductor_by_gaps()
        assert sg.is_symmetric()
        assert len(sg.gaps()) * 2 == sg.conductor


def test_delta_is_half_the_conductor():
    assert delta_from_multiplicities([3, 3, 3, 2, 1, 1]) == 10
    assert delta_from_multiplicities([4, 2, 2, 1, 1]) == 8


def test_invalid_generators():
    with pytest.raises(InvalidInput):
        ValueSemigroup((4, 6))
    with pytest.raises(InvalidInput):
        ValueSemigroup((0, 1))


def test_structure_predicates():
    sg = ValueSemigroup((4, 6, 25))
    assert sg.is_strongly_increasing()
    assert sg.is_nice()
    assert sg.is_minimal()
    assert not ValueSemigroup((4, 6, 10, 13)).is_minimal()
