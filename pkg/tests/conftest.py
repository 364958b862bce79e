import pytest
from hypothesis import HealthCheck, settings

from cofrob.builders import build, group_algebra, random_path_coalgebra, sweedler, taft

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture(scope="session")
def kc2():
    return group_algebra([2])


@pytest.fixture(scope="session")
def kc6():
    return group_algebra([6])


@pytest.fixture(scope="session")
def h4():
    return sweedler()


@pytest.fixture(scope="session")
def t3():
    return taft(3)


@pytest.fixture(scope="session")
def qls27():
    return build("qls", {"G": "3", "theta": "2"})


@pytest.fixture(scope="session")
def paths():
    return [random_path_coalgebra(s) for s in range(20)]


@pytest.fixture(scope="session")
def kc2c3():
    return group_algebra([2, 3])
