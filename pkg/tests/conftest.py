import math

import pytest
from hypothesis import HealthCheck, settings

from singular_zeta import ExtensionParam, ProblemConfig

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def unit_cfg():
    return ProblemConfig(1.0, 1.0, 1.0)


@pytest.fixture(scope="session")
def free_cfg():
    return ProblemConfig(0.0, 1.0, 1.0)


@pytest.fixture(scope="session")
def dirichlet():
    return ExtensionParam(math.inf)
