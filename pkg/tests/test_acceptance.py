"""Acceptance gate: one test per criterion, summarized at the end of the run."""
from pathlib import Path

import numpy as np
import pytest

from semidual import (
    bass_series,
    beta0,
    betti_gap_check,
    check_chain,
    check_homothety,
    check_semidualizing,
    cm_type,
    factorization_check,
    free_module,
    matlis_dual,
    minimal_free_resolution,
    poincare_series,
    residue_field_module,
    series_mul,
    tor_dims,
    verify_prop0101,
    verify_prop0103,
)
from semidual.cli import run
from semidual.complexes import direct_sum_complex, hom_complex, module_complex, sup_inf, tensor_complex
from semidual.duality import strictness
from semidual.series import LaurentPolyZ, geometric

import _complexes_gen as gen

DATA = Path(__file__).parent / "data"
EX_FILES = [str(DATA / "xsq_xy_gf101.ring"), str(DATA / "xsq_xy_qq.ring")]


def machine(*argv):
    code, out, err = run(list(argv) + ["--format", "machine"])
    assert not err, err
    return code, out.splitlines()


@pytest.mark.criterion(1, "Bass numbers 1,2,2 of k[x,y]/(x^2,xy) over GF(101) and QQ, saturation-free")
def test_criterion_1(acceptance):
    for path in EX_FILES:
        code, lines = machine("bass", "--ring", path, "--cutoff", "2")
        assert code == 0
        assert lines[:3] == ["bass i=0 mu=1", "bass i=1 mu=2", "bass i=2 mu=2"]
        assert lines[-1].startswith("status=verified cutoff=2")
        assert not any("saturated" in line for line in lines)
    acceptance()


@pytest.mark.criterion(2, "rigidity of k[x,y]/(x^2,xy) via condition (a) at i=2")
def test_criterion_2(acceptance):
    for path in EX_FILES:
        code, lines = machine("verify-bounds", "--ring", path, "--thm", "0102", "--g", "0")
        assert code == 0
        assert any(line.startswith("bound thm=0102 outcome=holds condition=a g=0 mu=2") for line in lines)
        assert "conclusion=free-or-dualizing witness_i=2" in lines
    acceptance()


@pytest.mark.criterion(3, "series product (2,1,1,...)(5,1,1,...) = (10,7,8,9,...) to t^10")
def test_criterion_3(acceptance):
    p = series_mul(geometric(2, 1, 10), geometric(5, 1, 10))
    assert p == LaurentPolyZ(0, tuple([10] + list(range(7, 17))), 10)
    acceptance()


@pytest.mark.criterion(4, "artinian duality suite on GF(7)[x,y]/(x,y)^2")
def test_criterion_4(acceptance, m2):
    D, R = matlis_dual(m2), free_module(m2, [0], name="R")
    assert cm_type(m2) == 2
    assert check_semidualizing(D, 8).status == "verified"
    assert beta0(D) == 2
    rep = check_chain([D, R], 8)
    assert rep.status == "verified" and rep.strict[0].strict is True
    assert factorization_check([D, R], 8).status == "verified"
    r = verify_prop0101(2, 1)
    assert r.outcome == "holds" and r.conclusion == "free-or-dualizing"
    assert betti_gap_check(D, 8).status == "no-gaps"
    acceptance()


@pytest.mark.criterion(5, "Gorenstein collapse on QQ[x]/(x^2)")
def test_criterion_5(acceptance, gor):
    D, R = matlis_dual(gor), free_module(gor, [0], name="R")
    assert beta0(D) == 1 and check_homothety(D).iso
    assert strictness(D, R, 4).reason == "isomorphic"
    bass, _ = bass_series(gor, 4)
    assert bass == LaurentPolyZ(0, (1,))
    r = verify_prop0103(bass, 0)
    assert r.values["bound"] == 0 and r.conclusion == "only-trivial-chains"
    assert verify_prop0103(bass, 0, d=1).outcome == "fails"
    k = residue_field_module(gor)
    for n in range(11):
        assert poincare_series(k, n) == LaurentPolyZ(0, (1,) * (n + 1), n)
    acceptance()


def _hd(X, i, w):
    h = X.homology_dims(i, w)
    return [h[d] for d in w]


def _window(*Xs):
    lo = min(X.window()[0] for X in Xs if X.indices)
    hi = max(X.window()[-1] for X in Xs if X.indices)
    return range(lo - 1, hi + 2)


def _rank_series(X):
    r = X.ranks()
    lo = min(r)
    return LaurentPolyZ(lo, tuple(r.get(i, 0) for i in range(lo, max(r) + 1)))


@pytest.mark.criterion(6, "complex-calculus properties on 120 seeded random complexes")
def test_criterion_6(acceptance):
    count = 0
    for name, R, rng in gen.cases(60, seed=2024):
        X, Y = gen.random_complex(R, rng), gen.random_complex(R, rng)
        count += 2
        T, H = tensor_complex(X, Y), hom_complex(X, Y)
        k = int(rng.integers(-2, 3))
        for Z in (X.shift(k), T, H):
            assert Z.squares_to_zero()
        w = _window(X, Y, T, H)
        for j in range(X.lo - 1, X.hi + 2):
            assert _hd(X.shift(k), j + k, w) == _hd(X, j, w)
        S = direct_sum_complex(X, Y)
        for i in range(min(X.lo, Y.lo), max(X.hi, Y.hi) + 1):
            assert _hd(S, i, w) == [a + b for a, b in zip(_hd(X, i, w), _hd(Y, i, w))]
        Rc = module_complex(free_module(R, [0]))
        lhs, rhs = hom_complex(T, Rc), hom_complex(X, hom_complex(Y, Rc))
        for i in range(min(lhs.lo, rhs.lo), max(lhs.hi, rhs.hi) + 1):
            assert [lhs.term(i).dim(d) for d in w] == [rhs.term(i).dim(d) for d in w]
            assert _hd(lhs, i, w) == _hd(rhs, i, w)
        (F, A), (G, B) = gen.random_resolution(R, rng, 2), gen.random_resolution(R, rng, 2)
        a, b = int(rng.integers(-2, 3)), int(rng.integers(-2, 3))
        FG = tensor_complex(F.shift(a), G.shift(b))
        wf = _window(F, G, FG)
        assert sup_inf(FG, wf)[1] == sup_inf(F.shift(a), wf)[1] + sup_inf(G.shift(b), wf)[1]
        assert tor_dims(A, 2) == minimal_free_resolution(A, 2).betti[:3]
        assert _rank_series(F) * _rank_series(G) == _rank_series(tensor_complex(F, G))
    assert count >= 100
    acceptance()


@pytest.mark.criterion(7, "byte-identical machine output across runs and across fields")
def test_criterion_7(acceptance):
    commands = [
        ["bass", "--cutoff", "2"],
        ["betti", "--module", "k", "--length", "5"],
        ["betti", "--module", "R"],
        ["poincare", "--module", "k", "--length", "6"],
        ["verify-bounds", "--thm", "0102", "--g", "0"],
    ]
    for cmd in commands:
        outs = [run(cmd + ["--ring", path, "--format", "machine"]) for path in EX_FILES for _ in range(2)]
        assert all(o == outs[0] for o in outs), cmd
    m = [run(["check-sdc", "--ring", str(DATA / "m2_gf7.ring"), "--candidate", "dual", "--cutoff", "4", "--format", "machine"]) for _ in range(2)]
    assert m[0] == m[1]
    acceptance()
