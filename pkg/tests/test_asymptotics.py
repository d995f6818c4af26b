import math
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from rmcsst.asymptotics import (
    NONVANISHING,
    VANISHING,
    FamilySpec,
    asymptotic_rate,
    css_family_distance_vanishes,
    exact_rate,
    family_row,
    family_table,
    phi,
    rm_family_distance_verdict,
)
from rmcsst.csst import check_csst_bruteforce, check_csst_theorem, rm_pair
from rmcsst.css import css_params

from conftest import phi_quadrature

# frozen from the adaptive-Simpson oracle in conftest
PHI_MINUS_2 = 0.022750131948179153
PHI_MINUS_1 = 0.15865525393145702
GRID = [x / 2 for x in range(-12, 13)]


def test_quadrature_oracle_frozen_values():
    assert phi_quadrature(-2) == pytest.approx(PHI_MINUS_2, abs=1e-13)
    assert phi_quadrature(-1) == pytest.approx(PHI_MINUS_1, abs=1e-13)


def test_phi_examples():
    assert phi(0) == 0.5
    assert abs(phi(-2) - PHI_MINUS_2) <= 1e-7
    assert abs(phi(-1) - PHI_MINUS_1) <= 1e-12


@pytest.mark.parametrize("x", GRID)
def test_phi_against_quadrature(x):
    assert abs(phi(x) - phi_quadrature(x)) <= 1e-7


@given(st.floats(-30, 30, allow_nan=False))
def test_phi_symmetry(x):
    assert abs(phi(x) + phi(-x) - 1) <= 1e-12


def test_phi_monotone_on_grid():
    xs = [x / 10 for x in range(-80, 81)]
    values = [phi(x) for x in xs]
    assert all(a <= b for a, b in zip(values, values[1:]))


def test_phi_rejects_infinite():
    with pytest.raises(ValueError):
        phi(math.inf)


# --- exact rates ---------------------------------------------------------


def test_exact_rate_examples():
    assert exact_rate(1, 3) == Fraction(1, 2)
    for m in range(1, 12):
        assert exact_rate(m, m) == 1
    for m in range(1, 26, 2):
        assert exact_rate((m - 1) // 2, m) == Fraction(1, 2)


@pytest.mark.parametrize("m", range(0, 13))
def test_exact_rate_is_binomial_cdf(m):
    # count of m-bit integers with at most r ones
    for r in range(m + 1):
        count = sum(1 for i in range(1 << m) if bin(i).count("1") <= r)
        assert exact_rate(r, m) == Fraction(count, 1 << m)


def test_exact_rate_errors():
    with pytest.raises(ValueError):
        exact_rate(4, 3)


def test_even_m_rate_gap_shrinks():
    gaps = [abs(exact_rate((m - 1) // 2, m) - Fraction(1, 2)) for m in range(2, 41, 2)]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    # gap is binom(m, m/2) / 2^(m+1) ~ 1/sqrt(2 pi m)
    for m, g in zip(range(2, 41, 2), gaps):
        assert g == Fraction(comb(m, m // 2), 2 ** (m + 1))
        assert float(g) * math.sqrt(m) < 0.5


# --- families ------------------------------------------------------------


def test_family_row_const_explicit_r2():
    row = family_row(FamilySpec("const", 0, r2=0), 3)
    assert (row.m, row.r1, row.r2, row.n, row.k, row.d_lower, row.rate_c1, row.quantum_rate) == (
        3, 1, 0, 8, 3, 2, Fraction(1, 2), Fraction(3, 8),
    )
    assert css_params(rm_pair(3, 1, 0)).k == row.k


def test_family_row_third_order_m6():
    row = family_row(FamilySpec("third-order"), 6)
    assert (row.t, row.r1, row.r2, row.admissible) == (0, 2, 1, True)
    assert not family_row(FamilySpec("third-order"), 7).admissible


def test_family_row_sqrt_inadmissible():
    row = family_row(FamilySpec("sqrt", 1), 4)
    assert row.t == 2 and row.r1 == -1 and not row.admissible


def test_sqrt_t_is_exact_floor():
    spec = FamilySpec("sqrt", Fraction(3, 2))
    for m in range(1, 200):
        assert spec.t(m) ** 2 <= Fraction(9, 4) * m < (spec.t(m) + 1) ** 2


def test_third_order_t_values():
    spec = FamilySpec("third-order")
    assert [spec.t(m) for m in (3, 6, 9, 12, 15, 18)] == [0, 0, 1, 1, 2, 2]


@pytest.mark.parametrize(
    "spec",
    [FamilySpec("const", 0), FamilySpec("const", 1), FamilySpec("const", 0, r2=0), FamilySpec("sqrt", 1),
     FamilySpec("sqrt", Fraction(1, 2)), FamilySpec("linear", Fraction(1, 10)), FamilySpec("third-order")],
)
def test_admissible_rows_satisfy_theorem_and_bruteforce(spec):
    for row in family_table(spec, 40):
        if not row.admissible:
            continue
        assert check_csst_theorem(row.m, row.r1, row.r2)
        assert 0 <= row.quantum_rate <= 1 and 0 <= row.rate_c1 <= 1
        assert row.k == sum(comb(row.m, i) for i in range(row.r2 + 1, row.r1 + 1))
        if row.m <= 5:
            assert check_csst_bruteforce(rm_pair(row.m, row.r1, row.r2)).verdict


def test_asymptotic_rate_examples():
    assert asymptotic_rate(FamilySpec("const", 0)) == 0.5
    assert asymptotic_rate(FamilySpec("const", 3)) == 0.5
    assert abs(asymptotic_rate(FamilySpec("sqrt", 1)) - PHI_MINUS_2) <= 1e-7
    assert asymptotic_rate(FamilySpec("sqrt", 0)) == 0.5
    assert asymptotic_rate(FamilySpec("linear", Fraction(1, 10))) == VANISHING
    assert asymptotic_rate(FamilySpec("third-order")) == VANISHING


@given(st.sampled_from(["const", "sqrt", "linear"]), st.fractions(0, 20))
def test_asymptotic_rate_capped_at_half(kind, param):
    if kind == "const":
        param = Fraction(int(param))
    rate = asymptotic_rate(FamilySpec(kind, param))
    assert rate == VANISHING or 0 <= rate <= 0.5


def test_linear_warning_outside_range():
    assert FamilySpec("linear", Fraction(1, 4)).warnings
    assert not FamilySpec("linear", Fraction(1, 10)).warnings


def test_family_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec("bogus")
    with pytest.raises(ValueError):
        FamilySpec("sqrt", -1)
    with pytest.raises(ValueError):
        FamilySpec("const", Fraction(1, 2))


def test_rm_family_distance_verdict():
    assert rm_family_distance_verdict("constant", 2) == NONVANISHING
    assert rm_family_distance_verdict("half", 0) == VANISHING
    assert rm_family_distance_verdict("sqrt", 1) == VANISHING
    with pytest.raises(ValueError):
        rm_family_distance_verdict("weird")


def test_css_family_distance_decay():
    ok, table = css_family_distance_vanishes(FamilySpec("const", 0, r2=0), 10, 3)
    assert ok
    assert table == [(m, Fraction(2, 2**m)) for m in range(3, 11)]
    assert all(a[1] > b[1] for a, b in zip(table, table[1:]))
    ok, _ = css_family_distance_vanishes(FamilySpec("sqrt", 0), 10)
    assert ok
