import pytest

from airdecoherence import CODATA2018, GasEnvironment, Scatterer, SuperpositionGeometry

AMU = CODATA2018.amu
AIR = 28.97 * AMU


@pytest.fixture
def c():
    return CODATA2018


@pytest.fixture
def sphere():
    return Scatterer(4e-7)


def air(temperature, density=1e8):
    return GasEnvironment(temperature, density, AIR)


def geom(dx):
    return SuperpositionGeometry(dx)
