import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from splitcycles.graph import parse_graph  # noqa: E402

EXAMPLE1 = """\
u1 u2
u2 u3
u3 u4
u4 u1
u1 w1
u2 w1
"""

EXAMPLE2 = """\
u1 u2
u2 u3
u3 u4
u4 u1
u1 w1
u2 w1
u3 w2
u4 w2
"""

C4 = "u1 u2\nu2 u3\nu3 u4\nu4 u1\n"


@pytest.fixture
def ex1():
    return parse_graph(EXAMPLE1)


@pytest.fixture
def ex2():
    return parse_graph(EXAMPLE2)


@pytest.fixture
def c4():
    return parse_graph(C4)


@pytest.fixture
def c4_pendant():
    return parse_graph(C4 + "u1 w\n")


@pytest.fixture
def c4_wedge():
    """C4 plus an outside edge w1 w2 touching nothing on the cycle."""
    return parse_graph(C4 + "w1 w2\n")


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
