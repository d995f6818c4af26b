"""Reed-Muller codes RM(r, m) by monomial evaluation over F_2^m."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .gf2 import BitMatrix
from .linear_code import INFINITY, LinearCode


class RmParameterError(ValueError):
    pass


def _check(r: int, m: int) -> None:
    if m < 1:
        raise RmParameterError(f"m must be >= 1, got {m}")
    if r < -1 or r > m:
        raise RmParameterError(f"order r must satisfy -1 <= r <= m, got r={r}, m={m}")


def monomial_row(variables: tuple[int, ...], m: int) -> int:
    """Evaluation vector of prod(x_j for j in variables) at all points of F_2^m.

    Column ``i`` is the point whose ``j``-th least-significant bit gives
    the value of ``x_{j+1}``.
    """
    mask = 0
    for j in variables:
        mask |= 1 << j
    row = 0
    for i in range(1 << m):
        if i & mask == mask:
            row |= 1 << i
    return row


def monomials(r: int, m: int) -> list[tuple[int, ...]]:
    """Variable sets of degree <= r, by degree then lexicographically."""
    return [t for d in range(r + 1) for t in combinations(range(m), d)]


@dataclass(frozen=True)
class RmCode:
    r: int
    m: int
    code: LinearCode

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def dim(self) -> int:
        return self.code.dim

    def params(self) -> tuple[int, int, int | float]:
        return rm_params(self.r, self.m)


@lru_cache(maxsize=None)
def rm_code(r: int, m: int) -> RmCode:
    _check(r, m)
    rows = tuple(monomial_row(t, m) for t in monomials(r, m))
    return RmCode(r, m, LinearCode(BitMatrix(1 << m, rows)))


def rm_params(r: int, m: int) -> tuple[int, int, int | float]:
    """Closed-form ``(n, k, d)``; d is INFINITY for the zero code r = -1."""
    _check(r, m)
    if r == -1:
        return 1 << m, 0, INFINITY
    return 1 << m, sum(comb(m, i) for i in range(r + 1)), 1 << (m - r)


def rm_dual_order(r: int, m: int) -> int:
    if r < -1 or r > m:
        raise RmParameterError(f"order r must satisfy -1 <= r <= m, got r={r}, m={m}")
    return m - r - 1
