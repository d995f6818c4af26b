"""Binary linear codes: duals, puncturing/shortening, weights, self-dual subcodes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from . import gf2
from .gf2 import BitMatrix, BitVector, DimensionError

INFINITY = math.inf
"""Minimum distance of the zero code."""

ENUMERATION_CAP = 28
ORACLE_MAX_N = 12
HALF_ORACLE_MAX_QUOTIENT = 6


class CodeError(ValueError):
    pass


class EnumerationCapError(CodeError):
    """The requested exhaustive search is beyond the configured cap."""


class NoSelfDualSubcodeError(CodeError):
    pass


@dataclass(frozen=True, eq=False)
class LinearCode:
    """A length-``n`` binary code spanned by the rows of ``gen``.

    The reduced row-echelon basis is computed once and used for every
    comparison, so two codes are equal exactly when their row spaces are.
    """

    gen: BitMatrix
    canon: BitMatrix = field(init=False, repr=False)
    pivots: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        rows, pivots = gf2.rref_rows(self.gen.data, self.gen.ncols)
        object.__setattr__(self, "canon", BitMatrix(self.gen.ncols, tuple(rows)))
        object.__setattr__(self, "pivots", tuple(pivots))

    @classmethod
    def from_rows(cls, rows, n: int | None = None) -> LinearCode:
        return cls(BitMatrix.from_rows(rows, n))

    @classmethod
    def from_ints(cls, n: int, rows: Iterable[int]) -> LinearCode:
        return cls(BitMatrix(n, tuple(rows)))

    @classmethod
    def zero(cls, n: int) -> LinearCode:
        return cls(BitMatrix(n, ()))

    @classmethod
    def full(cls, n: int) -> LinearCode:
        return cls(BitMatrix.identity(n))

    @classmethod
    def repetition(cls, n: int) -> LinearCode:
        return cls(BitMatrix(n, ((1 << n) - 1,)))

    @classmethod
    def even_weight(cls, n: int) -> LinearCode:
        return cls(BitMatrix(n, tuple(1 | (1 << i) for i in range(1, n))))

    @property
    def n(self) -> int:
        return self.gen.ncols

    @property
    def dim(self) -> int:
        return self.canon.nrows

    @property
    def basis(self) -> tuple[int, ...]:
        return self.canon.data

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCode):
            return NotImplemented
        return self.n == other.n and self.canon.data == other.canon.data

    def __hash__(self) -> int:
        return hash((self.n, self.canon.data))

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.dim}])"

    def __contains__(self, v: BitVector | int) -> bool:
        bits = v.bits if isinstance(v, BitVector) else v
        return gf2.reduce_against(bits, self.canon.data, self.pivots) == 0

    def codeword(self, message: int) -> int:
        """Codeword for a message index against the canonical basis."""
        v = 0
        for j, row in enumerate(self.canon.data):
            if (message >> j) & 1:
                v ^= row
        return v

    def codewords(self) -> Iterable[int]:
        for i in range(1 << self.dim):
            yield self.codeword(i)

    def to_text(self) -> str:
        return self.gen.to_text()


def check_indices(indices: Iterable[int], n: int) -> tuple[int, ...]:
    """Validate and sort a coordinate set for length ``n``."""
    out = sorted(set(indices))
    if out and (out[0] < 0 or out[-1] >= n):
        raise IndexError(f"index set {out} out of range for length {n}")
    return tuple(out)


def complement(indices: Iterable[int], n: int) -> tuple[int, ...]:
    drop = set(indices)
    return tuple(i for i in range(n) if i not in drop)


def dual(c: LinearCode) -> LinearCode:
    if c.n < 1:
        raise CodeError("dual needs n >= 1")
    return LinearCode(BitMatrix(c.n, tuple(gf2.nullspace_rows(c.canon.data, c.n))))


def puncture(c: LinearCode, indices: Iterable[int]) -> LinearCode:
    """Delete the coordinates in ``indices`` from every codeword."""
    drop = check_indices(indices, c.n)
    keep = complement(drop, c.n)
    if not keep:
        raise CodeError("puncturing on every coordinate leaves length 0")
    return LinearCode(BitMatrix(len(keep), tuple(gf2.compress(r, keep) for r in c.canon.data)))


def vanishing_rows(rows: Sequence[int], indices: Iterable[int]) -> list[int]:
    """Basis of the subspace of span(rows) vanishing on ``indices``.

    Each index column is eliminated with one row, which is then discarded.
    """
    work = list(rows)
    for col in indices:
        bit = 1 << col
        for i, r in enumerate(work):
            if r & bit:
                break
        else:
            continue
        pivot = work.pop(i)
        for j in range(len(work)):
            if work[j] & bit:
                work[j] ^= pivot
    return work


def shorten(c: LinearCode, indices: Iterable[int]) -> LinearCode:
    """Keep codewords vanishing on ``indices`` and delete those coordinates."""
    drop = check_indices(indices, c.n)
    keep = complement(drop, c.n)
    if not keep:
        raise CodeError("shortening on every coordinate leaves length 0")
    rows = vanishing_rows(c.canon.data, drop)
    return LinearCode(BitMatrix(len(keep), tuple(gf2.compress(r, keep) for r in rows)))


def _enumeration_min_weight(rows: Sequence[int]) -> int:
    # Gray-code walk: one XOR per codeword.
    best = INFINITY
    v = 0
    for i in range(1, 1 << len(rows)):
        v ^= rows[(i & -i).bit_length() - 1]
        w = v.bit_count()
        if w < best:
            best = w
            if w == 1:
                break
    return best


def _syndrome_min_weight(c: LinearCode) -> int:
    # Smallest set of parity-check columns summing to zero.
    checks = gf2.nullspace_rows(c.canon.data, c.n)
    cols = []
    for j in range(c.n):
        s = 0
        for i, h in enumerate(checks):
            if (h >> j) & 1:
                s |= 1 << i
        cols.append(s)
    for w in range(1, c.n + 1):
        for combo in combinations(cols, w):
            acc = 0
            for s in combo:
                acc ^= s
            if acc == 0:
                return w
    raise AssertionError("unreachable: the all-columns sum bound failed")


def min_distance(c: LinearCode) -> int | float:
    """Exact minimum Hamming weight of the nonzero codewords.

    Low-rate codes are searched by Gray-code enumeration of all ``2**dim``
    codewords.  High-rate codes are searched by increasing error weight
    against the parity checks, bounded by ``n - dim + 1``.  Whichever
    route is cheaper runs; if both exceed ``2**ENUMERATION_CAP`` steps an
    :class:`EnumerationCapError` is raised.
    """
    k = c.dim
    if k == 0:
        return INFINITY
    enum_cost = 1 << k
    syn_cost = sum(comb(c.n, w) for w in range(1, c.n - k + 2))
    if min(enum_cost, syn_cost) > 1 << ENUMERATION_CAP:
        raise EnumerationCapError(f"dimension {k} at length {c.n} exceeds the enumeration cap")
    if enum_cost <= syn_cost:
        return _enumeration_min_weight(c.canon.data)
    return _syndrome_min_weight(c)


def is_even(c: LinearCode) -> bool:
    return all(r.bit_count() % 2 == 0 for r in c.canon.data)


def first_odd_row(c: LinearCode) -> int | None:
    for r in c.canon.data:
        if r.bit_count() & 1:
            return r
    return None


def is_self_orthogonal(c: LinearCode) -> bool:
    rows = c.canon.data
    for i, a in enumerate(rows):
        for b in rows[i:]:
            if (a & b).bit_count() & 1:
                return False
    return True


def is_subcode(a: LinearCode, b: LinearCode) -> bool:
    if a.n != b.n:
        raise DimensionError(f"lengths {a.n} and {b.n} differ")
    if a.dim > b.dim:
        return False
    return all(gf2.reduce_against(r, b.canon.data, b.pivots) == 0 for r in a.canon.data)


def contains_self_dual(c: LinearCode) -> bool:
    """True iff ``c`` has a self-dual subcode: n even and dual(c) inside c."""
    if c.n % 2:
        return False
    if c.n == 0:
        return True
    return is_subcode(dual(c), c)


def gaussian_binomial2(n: int, k: int) -> int:
    """Number of ``k``-dimensional subspaces of GF(2)^n, exactly."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= (1 << (n - i)) - 1
        den *= (1 << (i + 1)) - 1
    return num // den


def count_self_dual_subcodes(c: LinearCode) -> int:
    """Size of the family of half-length subcodes sandwiched between dual(c) and c.

    This is the Gaussian binomial ``[2k-n, k-n/2]_2``.  Taking duals pairs
    the family off, and its size is odd, so at least one member is fixed,
    i.e. self-dual.  The number of self-dual members themselves is returned
    by ``len(enumerate_self_dual_subcodes(c))`` and is generally smaller.
    """
    if not contains_self_dual(c):
        raise NoSelfDualSubcodeError(f"{c!r} contains no self-dual subcode")
    n, k = c.n, c.dim
    return gaussian_binomial2(2 * k - n, k - n // 2)


# --- enumeration oracles -------------------------------------------------


def _subspaces_of_dim(ambient_dim: int, target: int) -> set[tuple[int, ...]]:
    """All ``target``-dim subspaces of GF(2)^ambient_dim as canonical bases.

    Grown one vector at a time and deduplicated by canonical form.
    """
    level = {()}
    for _ in range(target):
        nxt = set()
        for basis in level:
            for v in range(1, 1 << ambient_dim):
                rows, _ = gf2.rref_rows(basis + (v,), ambient_dim)
                if len(rows) == len(basis) + 1:
                    nxt.add(tuple(rows))
        level = nxt
    return level


def _check_oracle_scale(c: LinearCode) -> None:
    if c.n > ORACLE_MAX_N:
        raise EnumerationCapError(f"oracle scale exceeded: n = {c.n} > {ORACLE_MAX_N}")


def enumerate_half_subcodes(c: LinearCode) -> list[LinearCode]:
    """Every subcode of dimension n/2 that contains dual(c), by explicit search.

    Spans dual(c) together with each half-size subspace of a complement of
    dual(c) in c; results are deduplicated and sorted by canonical basis.
    Limited to ``dim(c) - dim(dual(c)) <= HALF_ORACLE_MAX_QUOTIENT``.
    """
    if c.n % 2:
        return []
    d = dual(c)
    if not is_subcode(d, c):
        return []
    # complement basis of d inside c
    extra: list[int] = []
    span = list(d.basis)
    for r in c.basis:
        rows, _ = gf2.rref_rows(span + [r], c.n)
        if len(rows) > len(span):
            span = rows
            extra.append(r)
    if len(extra) > HALF_ORACLE_MAX_QUOTIENT:
        raise EnumerationCapError(f"oracle scale exceeded: quotient dimension {len(extra)}")
    need = c.n // 2 - d.dim
    found = set()
    for sub in _subspaces_of_dim(len(extra), need):
        lifted = []
        for coeffs in sub:
            v = 0
            for j, e in enumerate(extra):
                if (coeffs >> j) & 1:
                    v ^= e
            lifted.append(v)
        code = LinearCode.from_ints(c.n, list(d.basis) + lifted)
        found.add(code)
    return sorted(found, key=lambda x: x.canon.data)


def enumerate_self_dual_subcodes(c: LinearCode) -> list[LinearCode]:
    """All self-dual subcodes of ``c`` found by exhaustive search (test oracle).

    Self-orthogonal subcodes are grown one even-weight vector at a time
    starting from the zero code, so nothing here relies on dual(c).
    Sorted lexicographically by canonical basis.
    """
    _check_oracle_scale(c)
    n = c.n
    if n % 2 or c.dim < n // 2:
        return []
    words = [w for w in c.codewords() if w and w.bit_count() % 2 == 0]
    level = {()}
    for _ in range(n // 2):
        nxt = set()
        for basis in level:
            _, pivots = gf2.rref_rows(basis, n)
            tried = set()
            for w in words:
                if any((w & b).bit_count() & 1 for b in basis):
                    continue
                # one extension per coset of span(basis)
                red = gf2.reduce_against(w, basis, pivots)
                if red == 0 or red in tried:
                    continue
                tried.add(red)
                rows, _ = gf2.rref_rows(basis + (w,), n)
                nxt.add(tuple(rows))
        level = nxt
        if not level:
            return []
    return sorted((LinearCode.from_ints(n, b) for b in level), key=lambda x: x.canon.data)


def find_self_dual_subcode(c: LinearCode) -> LinearCode | None:
    """Depth-first search for one self-dual subcode; None if there is none.

    Independent of the dual-containment criterion.  Works beyond oracle
    scale when a witness exists, since the search stops at the first hit.
    """
    n = c.n
    if n % 2 or c.dim < n // 2:
        return None
    if n == 0:
        return LinearCode.zero(0)
    words = sorted({w for w in c.codewords() if w and w.bit_count() % 2 == 0})
    seen: set[tuple[int, ...]] = set()

    def grow(basis: tuple[int, ...]) -> tuple[int, ...] | None:
        if len(basis) == n // 2:
            return basis
        if basis in seen:
            return None
        seen.add(basis)
        _, pivots = gf2.rref_rows(basis, n)
        tried = set()
        for w in words:
            if any((w & b).bit_count() & 1 for b in basis):
                continue
            red = gf2.reduce_against(w, basis, pivots)
            if red == 0 or red in tried:
                continue
            tried.add(red)
            rows, _ = gf2.rref_rows(basis + (w,), n)
            hit = grow(tuple(rows))
            if hit is not None:
                return hit
        return None

    hit = grow(())
    return None if hit is None else LinearCode.from_ints(n, hit)
