"""Deciding the CSS-T property of a CSS pair.

Three routes are provided:

* ``check_csst_bruteforce``: for every nonzero x in C2, the restriction of
  dual(C1) to supp(x) must contain a self-dual code (tested as: even length
  and the restriction's dual lies inside it).
* ``check_csst_corollary``: for every nonzero x in C2, C1 punctured to
  supp(x) must lie inside dual(C1) shortened to supp(x).
* ``check_csst_theorem``: closed form for Reed-Muller pairs.

Both enumerating routes require C2 to be even first, and walk the
codewords of C2 in increasing message order against its canonical basis,
so the witness (the first failing codeword) is the same for both routes
and independent of how the work is split across processes.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from . import gf2, reed_muller
from .css import CssPair, make_css
from .gf2 import BitVector
from .linear_code import (
    EnumerationCapError,
    LinearCode,
    complement,
    contains_self_dual,
    dual,
    first_odd_row,
    is_subcode,
    puncture,
    shorten,
    vanishing_rows,
)

CSST_DIM_CAP = 20
THREADS_ENV = "RMCSST_THREADS"
PARALLEL_MIN_CODEWORDS = 1 << 10

DEFINITION = "definition"
COROLLARY = "corollary"
THEOREM = "theorem"


class TheoremInapplicable(ValueError):
    """Parameters fall outside the closed form's parameterization."""


@dataclass(frozen=True)
class CssTReport:
    verdict: bool
    method: str
    witness: Optional[BitVector] = None
    checked_count: int = 0


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


# --- per-codeword conditions on packed ints ----------------------------------


def _restriction_self_dual_ok(x: int, n: int, c1: tuple[int, ...], c1_perp: tuple[int, ...]) -> bool:
    keep = gf2.support_of(x)
    s = len(keep)
    if s % 2:
        return False
    drop = complement(keep, n)
    rows = [gf2.compress(r, keep) for r in vanishing_rows(c1_perp, drop)]
    basis, pivots = gf2.rref_rows(rows, s)
    for h in gf2.nullspace_rows(basis, s):
        if gf2.reduce_against(h, basis, pivots):
            return False
    return True


def _punct_in_short_ok(x: int, n: int, c1: tuple[int, ...], c1_perp: tuple[int, ...]) -> bool:
    keep = gf2.support_of(x)
    s = len(keep)
    drop = complement(keep, n)
    short = [gf2.compress(r, keep) for r in vanishing_rows(c1_perp, drop)]
    basis, pivots = gf2.rref_rows(short, s)
    for r in c1:
        if gf2.reduce_against(gf2.compress(r, keep), basis, pivots):
            return False
    return True


_CONDITIONS: dict[str, Callable[[int, int, tuple, tuple], bool]] = {
    DEFINITION: _restriction_self_dual_ok,
    COROLLARY: _punct_in_short_ok,
}


def _first_failure(method: str, n: int, c1: tuple, c1_perp: tuple, c2: tuple, start: int, stop: int) -> Optional[int]:
    """Smallest message index in [start, stop) whose codeword fails, else None."""
    check = _CONDITIONS[method]
    k = len(c2)
    half = k // 2
    lo_rows, hi_rows = c2[:half], c2[half:]
    lo_table = [0] * (1 << half)
    for i in range(1, 1 << half):
        lo_table[i] = lo_table[i & (i - 1)] ^ lo_rows[(i & -i).bit_length() - 1]
    hi_cache: dict[int, int] = {}
    for msg in range(start, stop):
        hi = msg >> half
        hv = hi_cache.get(hi)
        if hv is None:
            hv = 0
            for j, row in enumerate(hi_rows):
                if (hi >> j) & 1:
                    hv ^= row
            hi_cache[hi] = hv
        x = hv ^ lo_table[msg & ((1 << half) - 1)]
        if not check(x, n, c1, c1_perp):
            return msg
    return None


def _run(p: CssPair, method: str) -> CssTReport:
    c2 = p.c2
    if c2.dim > CSST_DIM_CAP:
        raise EnumerationCapError(f"dim(C2) = {c2.dim} exceeds the CSS-T enumeration cap {CSST_DIM_CAP}")
    odd = first_odd_row(c2)
    if odd is not None:
        return CssTReport(False, method, BitVector(p.n, odd), 0)
    total = 1 << c2.dim
    args = (method, p.n, p.c1.basis, dual(p.c1).basis, c2.basis)
    workers = worker_count()
    if workers == 1 or total < PARALLEL_MIN_CODEWORDS:
        fail = _first_failure(*args, 1, total)
    else:
        step = -(-(total - 1) // workers)
        bounds = [(s, min(s + step, total)) for s in range(1, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_first_failure, *args, a, b) for a, b in bounds]
            hits = [f.result() for f in futures]
        found = [h for h in hits if h is not None]
        fail = min(found) if found else None
    if fail is None:
        return CssTReport(True, method, None, total - 1)
    return CssTReport(False, method, BitVector(p.n, c2.codeword(fail)), fail)


def check_csst_bruteforce(p: CssPair) -> CssTReport:
    return _run(p, DEFINITION)


def check_csst_corollary(p: CssPair) -> CssTReport:
    return _run(p, COROLLARY)


# --- isolated re-checks through the public code operations -----------------


def restriction_contains_self_dual(c1: LinearCode, x: BitVector) -> bool:
    """Does dual(C1) restricted to supp(x) contain a self-dual code?"""
    supp = x.support()
    if not supp:
        return True
    return contains_self_dual(shorten(dual(c1), complement(supp, c1.n)))


def corollary_inclusion_holds(c1: LinearCode, x: BitVector) -> bool:
    """Is C1 punctured onto supp(x) inside dual(C1) shortened onto supp(x)?"""
    supp = x.support()
    if not supp:
        return True
    drop = complement(supp, c1.n)
    return is_subcode(puncture(c1, drop), shorten(dual(c1), drop))


# --- closed form for Reed-Muller pairs ------------------------------------


def check_csst_theorem(m: int, r1: int, r2: int) -> bool:
    """CSS(RM(r1, m), RM(r2, m)) is CSS-T iff r2 <= 2t + 1 (m even) or r2 <= 2t (m odd).

    Here ``t = floor((m - 1) / 2) - r1``; requires ``0 <= r2 <= r1 <= floor((m-1)/2)``.
    """
    top = (m - 1) // 2
    if m < 1 or r2 < 0 or r2 > r1 or r1 > top:
        raise TheoremInapplicable(
            f"(m={m}, r1={r1}, r2={r2}) needs 0 <= r2 <= r1 <= {max(top, 0)}; use brute force"
        )
    t = top - r1
    return r2 <= (2 * t + 1 if m % 2 == 0 else 2 * t)


def theorem_applicable(m: int, r1: int, r2: int) -> bool:
    return m >= 1 and 0 <= r2 <= r1 <= (m - 1) // 2


def rm_pair(m: int, r1: int, r2: int) -> CssPair:
    return make_css(reed_muller.rm_code(r1, m).code, reed_muller.rm_code(r2, m).code)


class CrossValidationRow(NamedTuple):
    m: int
    r1: int
    r2: int
    theorem: bool
    bruteforce: bool
    corollary: bool

    @property
    def agree(self) -> bool:
        return self.theorem == self.bruteforce == self.corollary


def theorem_triples(m_max: int, m_min: int = 1):
    for m in range(m_min, m_max + 1):
        top = (m - 1) // 2
        for r1 in range(top + 1):
            for r2 in range(r1 + 1):
                yield m, r1, r2


def cross_validate(m_max: int, m_min: int = 1) -> list[CrossValidationRow]:
    """Closed form vs. both enumeration routes over the closed form's range."""
    if m_max > 5:
        raise EnumerationCapError("cross validation is limited to m <= 5")
    rows = []
    for m, r1, r2 in theorem_triples(m_max, m_min):
        pair = rm_pair(m, r1, r2)
        rows.append(
            CrossValidationRow(
                m, r1, r2,
                check_csst_theorem(m, r1, r2),
                check_csst_bruteforce(pair).verdict,
                check_csst_corollary(pair).verdict,
            )
        )
    return rows
