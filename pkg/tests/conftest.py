import pytest

from geodetic.enumeration import run_enumeration
from geodetic.moore import build_base


@pytest.fixture(scope="session")
def petersen():
    return build_base("petersen")


@pytest.fixture(scope="session")
def k4():
    return build_base("k4")


@pytest.fixture(scope="session")
def petersen_runs(petersen):
    """Enumeration results for D = 2..7, computed once per session."""
    return {D: run_enumeration(petersen, D) for D in range(2, 8)}


@pytest.fixture(scope="session")
def k4_runs(k4):
    return {D: run_enumeration(k4, D) for D in range(1, 9)}
