import pytest
from hypothesis import HealthCheck, settings

from cliffsym.clifford import ParityConfig

settings.register_profile("cliffsym", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("cliffsym")


@pytest.fixture
def odd2():
    return ParityConfig.all_odd(2)


@pytest.fixture
def even3():
    return ParityConfig.all_even(3)
