from fractions import Fraction

import pytest

from daha.coeffs import TwoParamField


@pytest.fixture(scope="session")
def fld4():
    return TwoParamField(4)


@pytest.fixture(scope="session")
def fld16():
    return TwoParamField(16)


@pytest.fixture(scope="session")
def half():
    return Fraction(1, 2)
