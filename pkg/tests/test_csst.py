import pytest
from hypothesis import given, settings, strategies as st

from rmcsst import csst
from rmcsst.css import make_css
from rmcsst.csst import (
    TheoremInapplicable,
    check_csst_bruteforce,
    check_csst_corollary,
    check_csst_theorem,
    corollary_inclusion_holds,
    cross_validate,
    restriction_contains_self_dual,
    rm_pair,
)
from rmcsst.gf2 import BitVector
from rmcsst.linear_code import (
    EnumerationCapError,
    LinearCode,
    complement,
    dual,
    enumerate_self_dual_subcodes,
    is_even,
    shorten,
)
from rmcsst.reed_muller import rm_code

from conftest import codeword_set
from test_css import nested_pairs


def definition_oracle(pair):
    """Definition check straight from codeword sets: even C2, and for every x a
    self-dual code of length |supp x| inside the restriction of dual(C1)."""
    if not is_even(pair.c2):
        return False
    for x in sorted(codeword_set(pair.c2)):
        if not x:
            continue
        supp = BitVector(pair.n, x).support()
        restricted = shorten(dual(pair.c1), complement(supp, pair.n))
        if not enumerate_self_dual_subcodes(restricted):
            return False
    return True


def test_bruteforce_examples():
    r = check_csst_bruteforce(rm_pair(3, 1, 0))
    assert r.verdict and r.witness is None and r.method == "definition"
    r = check_csst_bruteforce(rm_pair(3, 1, 1))
    assert not r.verdict and r.witness.weight() == 4
    assert r.witness.bits in rm_code(1, 3).code
    for c in [rm_code(1, 3).code, LinearCode.full(6), LinearCode.repetition(5)]:
        assert check_csst_bruteforce(make_css(c, LinearCode.zero(c.n))).verdict


def test_corollary_examples():
    assert check_csst_corollary(rm_pair(3, 1, 0)).verdict
    a = check_csst_corollary(rm_pair(3, 1, 1))
    b = check_csst_bruteforce(rm_pair(3, 1, 1))
    assert not a.verdict and a.witness == b.witness
    assert check_csst_corollary(rm_pair(4, 2, 0)).verdict == check_csst_bruteforce(rm_pair(4, 2, 0)).verdict


def test_odd_c2_short_circuits():
    pair = make_css(LinearCode.full(4), LinearCode.full(4))
    r = check_csst_bruteforce(pair)
    assert not r.verdict and r.witness.weight() % 2 == 1 and r.checked_count == 0
    assert r.witness.bits == min(LinearCode.full(4).basis)


@pytest.mark.parametrize(
    "m, r1, r2, expected", [(3, 1, 0, True), (3, 1, 1, False), (4, 1, 1, True)]
)
def test_theorem_examples(m, r1, r2, expected):
    assert check_csst_theorem(m, r1, r2) is expected


@pytest.mark.parametrize("args", [(3, 2, 0), (4, 1, 2), (5, 3, 3), (3, 1, -1)])
def test_theorem_inapplicable(args):
    with pytest.raises(TheoremInapplicable):
        check_csst_theorem(*args)


def test_cross_validate_small():
    rows = cross_validate(3)
    assert (3, 1, 0, True, True, True) in rows
    assert (3, 1, 1, False, False, False) in rows
    assert all(r.agree for r in rows)
    assert (4, 1, 1, True, True, True) in cross_validate(4)
    single = cross_validate(1)
    assert len(single) == 1 and single[0][:3] == (1, 0, 0) and single[0].agree


def test_cross_validate_m5_all_agree():
    rows = cross_validate(5)
    assert len(rows) == 14
    assert all(r.agree for r in rows)


def test_monotone_in_r2():
    for m in range(1, 13):
        top = (m - 1) // 2
        for r1 in range(top + 1):
            for r2 in range(r1 + 1):
                if check_csst_theorem(m, r1, r2):
                    assert all(check_csst_theorem(m, r1, s) for s in range(r2 + 1))


@settings(max_examples=60, deadline=None)
@given(nested_pairs(max_n=10))
def test_methods_agree_with_identical_witness(pair):
    a = check_csst_bruteforce(pair)
    b = check_csst_corollary(pair)
    assert a.verdict == b.verdict
    assert a.witness == b.witness
    assert a.checked_count == b.checked_count
    assert (a.witness is None) == a.verdict
    if a.witness is not None and a.checked_count:
        assert a.witness.bits in pair.c2
        assert not corollary_inclusion_holds(pair.c1, a.witness)
        assert not restriction_contains_self_dual(pair.c1, a.witness)


@settings(max_examples=40, deadline=None)
@given(nested_pairs(max_n=8))
def test_bruteforce_matches_definition_oracle(pair):
    assert check_csst_bruteforce(pair).verdict == definition_oracle(pair)


def test_witness_fails_in_isolation():
    r = check_csst_corollary(rm_pair(5, 2, 1))
    assert not r.verdict
    assert not corollary_inclusion_holds(rm_code(2, 5).code, r.witness)


def test_cap():
    pair = make_css(rm_code(3, 6).code, rm_code(3, 6).code)
    with pytest.raises(EnumerationCapError):
        check_csst_bruteforce(pair)


def test_parallel_matches_serial(monkeypatch):
    pairs = [rm_pair(5, 2, 0), rm_pair(5, 2, 1), make_css(rm_code(2, 5).code, rm_code(1, 5).code)]
    serial = [(check_csst_bruteforce(p), check_csst_corollary(p)) for p in pairs]
    # widen the search so the process pool path is exercised
    wide = make_css(LinearCode.full(12), LinearCode.even_weight(12))
    serial.append((check_csst_bruteforce(wide), check_csst_corollary(wide)))
    pairs.append(wide)
    pairs += [rm_pair(5, 1, 1), rm_pair(4, 1, 1)]
    serial += [(check_csst_bruteforce(p), check_csst_corollary(p)) for p in pairs[-2:]]
    monkeypatch.setenv(csst.THREADS_ENV, "3")
    monkeypatch.setattr(csst, "PARALLEL_MIN_CODEWORDS", 2)
    parallel = [(check_csst_bruteforce(p), check_csst_corollary(p)) for p in pairs]
    assert parallel == serial


def test_threads_env_validation(monkeypatch):
    monkeypatch.setenv(csst.THREADS_ENV, "0")
    with pytest.raises(ValueError):
        csst.worker_count()
    monkeypatch.setenv(csst.THREADS_ENV, "x")
    with pytest.raises(ValueError):
        csst.worker_count()
    monkeypatch.delenv(csst.THREADS_ENV)
    assert csst.worker_count() == 1
