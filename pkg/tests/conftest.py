import pytest
from hypothesis import HealthCheck, settings

from hopfcyclic import presets

settings.register_profile("repo", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


_CACHE = {}


def preset(name):
    if name not in _CACHE:
        _CACHE[name] = presets.load(name)
    return _CACHE[name]


@pytest.fixture(scope="session")
def sign():
    return preset("group-sign-z2")


@pytest.fixture(scope="session")
def sweedler():
    return preset("sweedler4-dual-numbers")


@pytest.fixture(scope="session")
def z2():
    return preset("group-z2")


@pytest.fixture(scope="session")
def z3():
    return preset("group-z3")


@pytest.fixture(scope="session")
def trivial():
    return preset("trivial-k")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
