import pytest

from adjtoric.geometry import validate_configuration

PENTAGON = [(1, 0, 1), (1, 1, 1), (1, 2, 2), (1, 2, 3), (1, 0, 3)]
PENTAGON_WEIGHT = (0, 1, 0, 0, 1)
PENTAGON_ADJOINT = "7*t0^2 + 16*t0*t1 + 26*t0*t2 + 8*t1^2 + 28*t1*t2 + 23*t2^2"


@pytest.fixture
def pentagon():
    return validate_configuration(PENTAGON)


@pytest.fixture
def pentagon_weight():
    return PENTAGON_WEIGHT


@pytest.fixture
def unit_simplex():
    return validate_configuration([(1, 0, 0), (1, 1, 0), (1, 0, 1)])


@pytest.fixture
def unit_square():
    return validate_configuration([(1, 0, 0), (1, 1, 0), (1, 0, 1), (1, 1, 1)])


@pytest.fixture
def pentagon_adjoint():
    return PENTAGON_ADJOINT


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-size runs (deselect with -m 'not slow')")
