import math
import random
from itertools import product

import pytest
from hypothesis import strategies as st

from rmcsst.gf2 import BitMatrix
from rmcsst.linear_code import LinearCode


def span_set(rows, n):
    """All codewords spanned by ``rows`` (ints), by explicit linear combination."""
    words = set()
    for coeffs in product((0, 1), repeat=len(rows)):
        v = 0
        for c, r in zip(coeffs, rows):
            if c:
                v ^= r
        words.add(v)
    return frozenset(words)


def codeword_set(code: LinearCode):
    return span_set(list(code.gen.data), code.n)


def random_code(rng: random.Random, n: int, k: int) -> LinearCode:
    return LinearCode(BitMatrix(n, tuple(rng.getrandbits(n) for _ in range(k))))


@st.composite
def codes(draw, max_n=10, min_n=1, max_rows=None):
    n = draw(st.integers(min_n, max_n))
    k = draw(st.integers(0, max_rows if max_rows is not None else n))
    rows = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=k, max_size=k))
    return LinearCode(BitMatrix(n, tuple(rows)))


@st.composite
def matrices(draw, max_rows=8, max_cols=12):
    cols = draw(st.integers(1, max_cols))
    nrows = draw(st.integers(0, max_rows))
    rows = draw(st.lists(st.integers(0, (1 << cols) - 1), min_size=nrows, max_size=nrows))
    return BitMatrix(cols, tuple(rows))


def gaussian_density(x):
    return math.exp(-0.5 * x * x) / math.sqrt(2 * math.pi)


def _simpson(f, a, b, fa, fm, fb):
    return (b - a) / 6 * (fa + 4 * fm + fb)


def adaptive_simpson(f, a, b, tol=1e-13, depth=50):
    fa, fb = f(a), f(b)
    m = (a + b) / 2
    fm = f(m)
    whole = _simpson(f, a, b, fa, fm, fb)

    def rec(a, b, fa, fm, fb, whole, tol, depth):
        m = (a + b) / 2
        lm, rm = (a + m) / 2, (m + b) / 2
        flm, frm = f(lm), f(rm)
        left = _simpson(f, a, m, fa, flm, fm)
        right = _simpson(f, m, b, fm, frm, fb)
        if depth <= 0 or abs(left + right - whole) <= 15 * tol:
            return left + right + (left + right - whole) / 15
        return rec(a, m, fa, flm, fm, left, tol / 2, depth - 1) + rec(m, b, fm, frm, fb, right, tol / 2, depth - 1)

    return rec(a, b, fa, fm, fb, whole, tol, depth)


def phi_quadrature(x):
    """Standard normal CDF as 1/2 +/- the integral of the density over [0, |x|]."""
    if x == 0:
        return 0.5
    area = adaptive_simpson(gaussian_density, 0.0, abs(x))
    return 0.5 + area if x > 0 else 0.5 - area


@pytest.fixture
def rng():
    return random.Random(20240501)
