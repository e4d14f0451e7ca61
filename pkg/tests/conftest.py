import pytest

from planebranch.kernel.field import FieldSpec
from tests.helpers import poly


@pytest.fixture
def gf7():
    return FieldSpec(7)


@pytest.fixture
def cusp7():
    return poly("Y^2-X^3", 7)


@pytest.fixture
def genus2_f5():
    return poly("(Y^2-X^3)^2-Y*X^11", 5)


@pytest.fixture
def genus2_f7():
    return poly("(Y^2-X^3)^2-Y*X^11", 7)
