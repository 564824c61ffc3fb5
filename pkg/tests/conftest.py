import pytest

from sympat.moment_graph import build_moment_graph
from sympat.patterns import enumerate_patterns


@pytest.fixture(scope="session")
def graph2():
    return build_moment_graph(2)


@pytest.fixture(scope="session")
def graph1():
    return build_moment_graph(1)


@pytest.fixture(scope="session")
def all2():
    return list(enumerate_patterns(2))


@pytest.fixture(scope="session")
def sp2():
    return list(enumerate_patterns(2, symplectic_only=True))


@pytest.fixture(scope="session")
def sp3():
    return list(enumerate_patterns(3, symplectic_only=True))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
