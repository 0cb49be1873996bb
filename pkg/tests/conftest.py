from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import strategies as st

from seysen.lattice import Basis


def laplace_det(m):
    """Cofactor expansion along the first row; independent of elimination."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1) ** j * m[0][j] * laplace_det(minor)
    return total


def leibniz_det(m):
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        inversions = sum(p[i] > p[j] for i in range(n) for j in range(i + 1, n))
        term = (-1) ** inversions
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


def identity_rows(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


@pytest.fixture
def worked():
    """The 2x2 basis [[1,0],[1,1]] used throughout as a hand-checked fixture."""
    return Basis.from_rows([[1, 0], [1, 1]])


fractions_small = st.fractions(min_value=-20, max_value=20, max_denominator=7)


@st.composite
def int_matrices(draw, min_n=1, max_n=5, bound=9, square=True):
    n = draw(st.integers(min_n, max_n))
    m = n if square else draw(st.integers(n, n + 3))
    return [[draw(st.integers(-bound, bound)) for _ in range(m)] for _ in range(n)]


@st.composite
def rational_matrices(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    return [[draw(fractions_small) for _ in range(n)] for _ in range(n)]


@st.composite
def bases(draw, min_n=2, max_n=5, bound=9, rational=False):
    """Full-rank exact bases with n <= m."""
    from hypothesis import assume

    from seysen.errors import RankDeficient

    n = draw(st.integers(min_n, max_n))
    m = draw(st.integers(n, n + 2))
    entry = fractions_small if rational else st.integers(-bound, bound)
    rows = [[draw(entry) for _ in range(m)] for _ in range(n)]
    try:
        return Basis.from_rows(rows)
    except RankDeficient:
        assume(False)


def as_fractions(rows):
    return [[Fraction(x) for x in r] for r in rows]


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
