import pytest
from hypothesis import given, settings, strategies as st

from semidual import bass_series, check_chain, free_module, matlis_dual
from semidual.bounds import (
    big_omega,
    coeffwise_geq,
    lower_bound_poly,
    verify_prop0101,
    verify_prop0102,
    verify_prop0103,
    verify_thm0101,
)
from semidual.series import LaurentPolyZ

from test_modules import type4_c

EX = LaurentPolyZ(0, (1, 2, 2), 2)


def test_coeffwise_geq():
    assert coeffwise_geq(EX, EX) == ("holds", None)
    assert coeffwise_geq(EX, LaurentPolyZ(0, (1, 1, 1), 2))[0] == "holds"
    assert coeffwise_geq(LaurentPolyZ(0, (1, 2, 2, 2), 3), lower_bound_poly(2, 0, 3)) == ("fails", 1)
    assert coeffwise_geq(LaurentPolyZ(0, (1,), 2), LaurentPolyZ(0, (1,), -1))[0] == "inconclusive"


def test_lower_bound_poly():
    assert lower_bound_poly(0, 0, 4).coeffs == (1,) * 5
    assert lower_bound_poly(1, 0, 4).coeffs == (1, 2, 3, 4, 5)
    p = lower_bound_poly(2, 3, 3)
    assert p.offset == 3 and p.coeffs == (1, 3, 6, 10)


@settings(max_examples=50)
@given(st.integers(1, 6), st.integers(1, 10))
def test_pascal_recurrence(d, i):
    c = lambda d, i: lower_bound_poly(d, 0, i)[i]
    assert c(d, i) == c(d, i - 1) + c(d - 1, i)


@settings(max_examples=50)
@given(st.lists(st.integers(1, 9), min_size=1, max_size=8), st.integers(0, 3))
def test_degenerate_chain_bound_holds(cs, g):
    assert verify_thm0101(LaurentPolyZ(g, tuple(cs), g + len(cs) - 1), g, 0).outcome == "holds"


def test_chain_lower_bound_examples():
    r = verify_thm0101(EX, 0, 1)
    assert r.outcome == "fails" and r.witness_i == 2
    r = verify_thm0101(LaurentPolyZ(0, (1,)), 0, 1)
    assert r.outcome == "fails" and r.witness_i == 1


@pytest.mark.parametrize("n,omega", [(1, 0), (2, 1), (12, 3), (97, 1), (360, 6)])
def test_big_omega(n, omega):
    assert big_omega(n) == omega


def test_type_factor_bound_examples():
    r = verify_prop0101(2, 1)
    assert r.outcome == "holds" and r.conclusion == "free-or-dualizing"
    assert verify_prop0101(12, 3).outcome == "holds"
    assert verify_prop0101(4, 3).outcome == "fails"


def test_next_bass_bound_examples():
    assert verify_prop0103(EX, 0).values["bound"] == 2
    r = verify_prop0103(LaurentPolyZ(0, (1,)), 0)
    assert r.values["bound"] == 0 and r.conclusion == "only-trivial-chains"
    assert verify_prop0103(LaurentPolyZ(0, (1, 3), 1), 0, d=5).outcome == "fails"
    assert verify_prop0103(LaurentPolyZ(0, (1,), 0), 0).outcome == "inconclusive"


def test_rigidity_scan_examples():
    r = verify_prop0102(EX, 0)
    assert (r.outcome, r.condition, r.witness_i) == ("holds", "a", 2)
    assert verify_prop0102(LaurentPolyZ(0, (1,) * 5, 4), 0).witness_i == 1
    assert verify_prop0102(LaurentPolyZ(0, (2, 5, 9, 14), 3), 0, p=2).outcome == "inconclusive"
    assert verify_prop0102(LaurentPolyZ(0, (1,)), 0).witness_i == 1


def test_chain_length_respects_bass_bound(m2, type4):
    # a verified strict chain of length d+1 starting at the dual forces the degree-d bound
    for R, chain, cutoff in [
        (m2, lambda R: [matlis_dual(R), free_module(R, [0], name="R")], 4),
        (type4, lambda R: [matlis_dual(R), type4_c(R), free_module(R, [0], name="R")], 2),
    ]:
        links = chain(R)
        rep = check_chain(links, cutoff)
        assert rep.status == "verified" and all(s.strict for s in rep.strict)
        bass, _ = bass_series(R, cutoff)
        d = len(links) - 2
        assert verify_thm0101(bass, 0, d).outcome == "holds"
        assert verify_prop0103(bass, 0, d + 1).outcome == "holds"
