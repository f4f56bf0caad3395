from fractions import Fraction

import hypothesis
import pytest
from hypothesis import strategies as st

from qbernstein.rational_core import QPoint
from qbernstein.verify import VerifyConfig, grid_points

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=500, deadline=None)
hypothesis.settings.load_profile("default")

SPEC_QS = (Fraction(1, 5), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4), Fraction(9, 10))


@st.composite
def unit_fractions(draw, max_den=60):
    """Rationals strictly inside (0, 1)."""
    den = draw(st.integers(2, max_den))
    num = draw(st.integers(1, den - 1))
    return Fraction(num, den)


@st.composite
def qpoints(draw, max_den=40, interior=False):
    q = draw(unit_fractions(max_den))
    # X = q + t (1 - q) with t in [0, 1]
    den = draw(st.integers(1, max_den))
    lo, hi = (1, den - 1) if interior else (0, den)
    if lo > hi:
        den, lo, hi = 2, 1, 1
    t = Fraction(draw(st.integers(lo, hi)), den)
    return QPoint(q, q + t * (1 - q))


@pytest.fixture(scope="session")
def grid():
    """The default verification grid: 5 q values x 11 X values."""
    return grid_points(VerifyConfig())


@pytest.fixture
def p_quarter():
    """q = 1/4, x = 1/2, so X = 1/2 and [x]_q = [1-x]_q = 2/3."""
    return QPoint(Fraction(1, 4), Fraction(1, 2))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
