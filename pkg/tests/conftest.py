import sys

import pytest

from lattika import fixtures
from lattika.corpus import lattices


@pytest.fixture
def G():
    return fixtures.SG()


@pytest.fixture
def Gp():
    return fixtures.SGprime()


@pytest.fixture
def ex1():
    return fixtures.example1()


@pytest.fixture
def ex2():
    return fixtures.example2()


@pytest.fixture
def ex3():
    return fixtures.example3()


@pytest.fixture(scope="session")
def corpus_lattices():
    return lattices()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
