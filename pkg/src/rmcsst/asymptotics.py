"""Exact and limiting rates of Reed-Muller CSS-T families.

A family fixes ``t(m) >= 0``; then ``r1(m) = floor((m-1)/2) - t(m)`` and
``r2(m)`` is either fixed or the largest value the CSS-T inequality allows
(``2t+1`` for even m, ``2t`` for odd m), clamped to ``r1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Union

from .csst import check_csst_theorem

VANISHING = "vanishing"
NONVANISHING = "nonvanishing"

CONST = "const"
SQRT = "sqrt"
LINEAR = "linear"
THIRD_ORDER = "third-order"
FAMILY_KINDS = (CONST, SQRT, LINEAR, THIRD_ORDER)

Asymptotic = Union[float, str]


def phi(x: float) -> float:
    """Standard normal CDF, via the complementary error function."""
    if not math.isfinite(x):
        raise ValueError("phi needs a finite argument")
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def exact_rate(r: int, m: int) -> Fraction:
    """k/n of RM(r, m), i.e. P(X <= r) for X ~ Binomial(m, 1/2)."""
    if m < 0 or not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    return Fraction(sum(comb(m, i) for i in range(r + 1)), 1 << m)


def _half_order(m: int) -> int:
    return (m - 1) // 2


@dataclass(frozen=True)
class FamilySpec:
    """``kind`` with its parameter; ``r2=None`` selects the max-allowed rule.

    const: t(m) = param; sqrt: t(m) = floor(param * sqrt(m));
    linear: t(m) = floor(param * m); third-order: the m divisible by 3
    family (param unused).
    """

    kind: str
    param: Fraction = Fraction(0)
    r2: Optional[int] = None

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}; expected one of {FAMILY_KINDS}")
        object.__setattr__(self, "param", Fraction(self.param))
        if self.param < 0:
            raise ValueError("family parameter must be non-negative")
        if self.kind == CONST and self.param.denominator != 1:
            raise ValueError("constant t must be an integer")
        if self.r2 is not None and self.r2 < 0:
            raise ValueError("explicit r2 must be non-negative")

    @property
    def warnings(self) -> list[str]:
        out = []
        if self.kind == LINEAR and not 0 < self.param < Fraction(1, 8):
            out.append(f"linear family slope {self.param} is outside the customary range 0 < a < 1/8")
        return out

    def t(self, m: int) -> Optional[int]:
        """t(m), or None where the family is undefined at m."""
        if self.kind == CONST:
            return int(self.param)
        if self.kind == SQRT:
            p, q = self.param.numerator, self.param.denominator
            return math.isqrt(p * p * m) // q
        if self.kind == LINEAR:
            return math.floor(self.param * m)
        if m % 3:
            return None
        shift = Fraction(2, 3) if m % 2 == 0 else Fraction(1, 3)
        value = Fraction(_half_order(m), 3) - shift
        if value.denominator != 1 or value < 0:
            return None
        return int(value)

    def r2_for(self, m: int, t: int, r1: int) -> int:
        if self.r2 is not None:
            return self.r2
        bound = 2 * t + 1 if m % 2 == 0 else 2 * t
        return min(bound, r1)


@dataclass(frozen=True)
class FamilyRow:
    m: int
    t: Optional[int]
    r1: Optional[int]
    r2: Optional[int]
    admissible: bool
    n: int = 0
    k: int = 0
    d_lower: int = 0
    rate_c1: Fraction = Fraction(0)
    quantum_rate: Fraction = Fraction(0)

    @property
    def relative_distance(self) -> Fraction:
        return Fraction(self.d_lower, self.n)

    @property
    def gamma(self) -> Optional[float]:
        """log(n/k) / log(d); None when k = 0 or d = 1."""
        if not self.admissible or self.k == 0 or self.d_lower <= 1:
            return None
        return math.log(self.n / self.k) / math.log(self.d_lower)


def family_row(spec: FamilySpec, m: int) -> FamilyRow:
    t = spec.t(m)
    if t is None:
        return FamilyRow(m, None, None, None, False)
    r1 = _half_order(m) - t
    r2 = spec.r2_for(m, t, r1)
    if r1 < 0 or r2 < 0 or r2 > r1 or not check_csst_theorem(m, r1, r2):
        return FamilyRow(m, t, r1, r2, False)
    n = 1 << m
    k = sum(comb(m, i) for i in range(r2 + 1, r1 + 1))
    return FamilyRow(
        m, t, r1, r2, True,
        n=n,
        k=k,
        d_lower=1 << (r2 + 1),
        rate_c1=exact_rate(r1, m),
        quantum_rate=Fraction(k, n),
    )


def family_table(spec: FamilySpec, m_max: int, m_min: int = 1) -> list[FamilyRow]:
    return [family_row(spec, m) for m in range(m_min, m_max + 1)]


def t_over_sqrt_m_limit(spec: FamilySpec) -> float:
    """lim t(m)/sqrt(m) for the family (math.inf when it diverges)."""
    if spec.kind == CONST:
        return 0.0
    if spec.kind == SQRT:
        return float(spec.param)
    if spec.kind == LINEAR:
        return math.inf if spec.param > 0 else 0.0
    return math.inf  # t(m) grows like m/6


def asymptotic_rate(spec: FamilySpec) -> Asymptotic:
    """Limit of the quantum rate: phi(-2c) with c = lim t/sqrt(m), or VANISHING."""
    c = t_over_sqrt_m_limit(spec)
    if math.isinf(c):
        return VANISHING
    return phi(-2.0 * c)


def format_asymptotic(spec: FamilySpec) -> str:
    value = asymptotic_rate(spec)
    if value == VANISHING:
        return VANISHING
    c = t_over_sqrt_m_limit(spec)
    if c == 0:
        return f"{value:.6g}"
    return f"Phi({-2 * c:g}) = {value:.6g}"


def rm_family_distance_verdict(kind: str, param: float = 0) -> str:
    """Does RM(r(m), m) keep a nonzero relative distance 2**-r as m grows?

    ``kind`` describes r(m): "constant" (r = param), "half"
    (r = floor((m-1)/2) - param), "sqrt" (r = floor(param*sqrt m)),
    "linear" (r = floor(param*m)).  Only an eventually constant order
    keeps the relative distance away from zero.
    """
    if kind == "constant":
        return NONVANISHING
    if kind in ("sqrt", "linear") and param == 0:
        return NONVANISHING
    if kind in ("half", "sqrt", "linear"):
        return VANISHING
    raise ValueError(f"unknown order family {kind!r}")


def css_family_distance_vanishes(spec: FamilySpec, m_max: int, m_min: int = 3) -> tuple[bool, list[tuple[int, Fraction]]]:
    """Relative distance bound d_lower/n along the family, and whether it decays.

    The flag is true when the last admissible value is below the first
    and the asymptotic rate does not exceed 1/2.
    """
    table = [(r.m, r.relative_distance) for r in family_table(spec, m_max, m_min) if r.admissible]
    decreasing = len(table) >= 2 and table[-1][1] < table[0][1]
    rate = asymptotic_rate(spec)
    capped = rate == VANISHING or rate <= 0.5
    return decreasing and capped, table
