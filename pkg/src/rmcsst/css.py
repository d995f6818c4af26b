"""CSS codes from nested classical pairs C2 <= C1."""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitMatrix, DimensionError
from .linear_code import LinearCode, dual, is_subcode, min_distance
from .reed_muller import rm_dual_order, rm_params


class NestingError(ValueError):
    """C2 is not a subcode of C1."""


@dataclass(frozen=True)
class CssPair:
    c1: LinearCode
    c2: LinearCode

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def k(self) -> int:
        return self.c1.dim - self.c2.dim


@dataclass(frozen=True)
class CssParams:
    n: int
    k: int
    d_lower: int | float


def make_css(c1: LinearCode, c2: LinearCode) -> CssPair:
    if c1.n != c2.n:
        raise DimensionError(f"code lengths {c1.n} and {c2.n} differ")
    if not is_subcode(c2, c1):
        raise NestingError("C2 is not contained in C1")
    return CssPair(c1, c2)


def css_params(p: CssPair) -> CssParams:
    """``(n, k1 - k2, min(d(C1), d(C2^perp)))`` by exhaustive distance search.

    Raises EnumerationCapError when a distance is out of reach; for
    Reed-Muller pairs the closed form 2**(r2+1) is available instead.
    """
    d1 = min_distance(p.c1)
    d2_perp = min_distance(dual(p.c2))
    return CssParams(p.n, p.k, min(d1, d2_perp))


def stabilizer_matrix(p: CssPair) -> BitMatrix:
    """Binary symplectic stabilizer generators in (X | Z) layout.

    Z-type rows ``(0 | g)`` for g in the canonical basis of dual(C1) come
    first, then X-type rows ``(g | 0)`` for g in the canonical basis of C2.
    """
    n = p.n
    z_rows = [g << n for g in dual(p.c1).basis]
    x_rows = list(p.c2.basis)
    return BitMatrix(2 * n, tuple(z_rows + x_rows))


def symplectic_product(a: int, b: int, n: int) -> int:
    mask = (1 << n) - 1
    ax, az = a & mask, a >> n
    bx, bz = b & mask, b >> n
    return ((ax & bz).bit_count() + (az & bx).bit_count()) & 1


def all_commute(g: BitMatrix) -> bool:
    n = g.ncols // 2
    rows = g.data
    return all(
        symplectic_product(rows[i], rows[j], n) == 0
        for i in range(len(rows))
        for j in range(i + 1, len(rows))
    )


def rm_css_params(m: int, r1: int, r2: int) -> CssParams:
    """Closed-form parameters of CSS(RM(r1, m), RM(r2, m)), no enumeration.

    d_lower = min(2**(m - r1), 2**(r2 + 1)), the second term being the
    distance of RM(r2, m)'s dual RM(m - r2 - 1, m).
    """
    if r2 > r1:
        raise NestingError(f"RM({r2},{m}) is not contained in RM({r1},{m})")
    n, k1, d1 = rm_params(r1, m)
    _, k2, _ = rm_params(r2, m)
    _, _, d2_perp = rm_params(rm_dual_order(r2, m), m)
    return CssParams(n, k1 - k2, min(d1, d2_perp))
