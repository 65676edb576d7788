import sys

import pytest

from lattika import generators


@pytest.fixture(scope="session")
def ex5():
    return generators.named("ex5")


@pytest.fixture(scope="session")
def m3():
    return generators.named("m3")


@pytest.fixture(scope="session")
def n5():
    return generators.named("n5")


@pytest.fixture(scope="session")
def b2():
    return generators.boolean(2)


@pytest.fixture(scope="session")
def catalog():
    return generators.default_catalog()


@pytest.fixture(scope="session")
def small_catalog(catalog):
    return [e for e in catalog if e.lattice.n <= 8]


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
