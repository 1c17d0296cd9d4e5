import random

import pytest

from plgb.trees import Alphabet


@pytest.fixture
def one():
    return Alphabet.parse_inline("a:1")


@pytest.fixture
def xy():
    return Alphabet.parse_inline("x:1,y:1")


@pytest.fixture
def graded():
    return Alphabet.parse_inline("a1:1,a2:2,a3:3,a4:4")


@pytest.fixture
def rng():
    return random.Random(20261017)


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
