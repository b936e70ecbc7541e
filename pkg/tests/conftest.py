from fractions import Fraction as F

import pytest
from hypothesis import strategies as st

from fuzzybasis import FuzzyFamily, PLFunc, canonical_basis


def rationals(denominators=(1, 2, 3, 4, 5, 6, 7, 8, 10, 12)):
    return st.builds(lambda d, k: F(min(k, d), d), st.sampled_from(denominators),
                     st.integers(min_value=0, max_value=12))


@st.composite
def plfuncs(draw, max_breakpoints=6):
    inner = draw(st.lists(rationals(), max_size=max_breakpoints - 2, unique=True))
    xs = [F(0), *sorted(x for x in inner if 0 < x < 1), F(1)]
    ys = draw(st.lists(rationals(), min_size=len(xs), max_size=len(xs)))
    return PLFunc(tuple(zip(xs, ys)))


@st.composite
def families(draw, min_size=1, max_size=4, max_breakpoints=5):
    members = draw(st.lists(plfuncs(max_breakpoints), min_size=min_size, max_size=max_size))
    return FuzzyFamily(tuple(members))


@pytest.fixture
def tent():
    return PLFunc(((0, 0), (F(1, 2), 1), (1, 0)))


@pytest.fixture
def plateau():
    return PLFunc(((0, 0), (F(1, 4), 1), (F(3, 4), 1), (1, 0)))


@pytest.fixture
def identity():
    return PLFunc.identity()


@pytest.fixture
def t3():
    return canonical_basis(3)


@pytest.fixture
def half_path():
    return FuzzyFamily.of(PLFunc(((0, 1), (1, F(1, 2)))), PLFunc(((0, 0), (1, F(1, 2)))))


@pytest.fixture
def kinked():
    f1 = PLFunc(((0, 1), (F(1, 2), F(1, 4)), (1, 0)))
    f2 = PLFunc(((0, 0), (F(1, 2), F(3, 4)), (1, 1)))
    return FuzzyFamily.of(f1, f2)


@pytest.fixture
def plateau_family():
    f1 = PLFunc(((0, 1), (F(1, 3), F(1, 2)), (F(2, 3), F(1, 2)), (1, 0)))
    f2 = PLFunc(((0, 0), (F(1, 3), F(1, 2)), (F(2, 3), F(1, 2)), (1, 1)))
    return FuzzyFamily.of(f1, f2)


@pytest.fixture
def constant_triple():
    c = PLFunc.constant(F(1, 3))
    return FuzzyFamily.of(c, c, c)


_ACCEPTANCE: dict[int, str] = {}


def record_acceptance(number, title, ok, detail=""):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}"
    _ACCEPTANCE[number] = line + (f"  ({detail})" if detail else "")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[number])
