from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from quasikoorn.scalars import ParamSpec

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# Specializations used across the suite.  None of them sits at +-1 and the
# ratios are far from any low-order coincidence.
SPECS = [
    ("3/2", "2/5", "7/3", "5/4", "3/7", "11/4"),
    ("5/3", "3/4", "9/5", "7/2", "4/9", "6/5"),
    ("2/7", "8/3", "5/6", "3/10", "9/4", "2/11"),
]


def spec(rank: int, n: int = 0) -> ParamSpec:
    return ParamSpec.create(rank, *SPECS[n])


@pytest.fixture
def p1():
    return spec(1)


@pytest.fixture
def p2():
    return spec(2)


@pytest.fixture
def p3():
    return spec(3)


def rationals(max_den: int = 8, bound: int = 3):
    return st.builds(lambda n, d: Fraction(n, d),
                     st.integers(-bound * max_den, bound * max_den), st.integers(1, max_den))


def points(rank: int, max_den: int = 8):
    return st.tuples(*[rationals(max_den) for _ in range(rank)])


def words(rank: int, max_size: int = 8):
    return st.lists(st.integers(0, rank), max_size=max_size)


# Acceptance lines are collected here and echoed in the terminal summary so
# that they appear even when pytest captures stdout.
ACCEPTANCE_LINES: list = []
GENERICITY_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    for title, lines in (("acceptance criteria", ACCEPTANCE_LINES),
                         ("genericity failure rates", GENERICITY_LINES)):
        if lines:
            terminalreporter.section(title)
            for line in lines:
                terminalreporter.write_line(line)
