import math

import numpy as np
import pytest

from semidual import free_module, minimal_free_resolution, residue_field_module, tor_dims
from semidual.complexes import (
    ChainMap,
    Complex,
    direct_sum_complex,
    free_complex,
    hom_complex,
    module_complex,
    morphism_is_quasiiso,
    sup_inf,
    tensor_complex,
)
from semidual.modules import RMatrix

import _complexes_gen as gen


def hdims(X, i, window):
    return [X.homology_dims(i, window)[d] for d in window]


def span(*Xs):
    lo = min(X.window()[0] for X in Xs if X.indices)
    hi = max(X.window()[-1] for X in Xs if X.indices)
    return range(lo - 1, hi + 2)


@pytest.mark.parametrize("name,R,rng", list(gen.cases(24, seed=1)))
def test_square_zero_is_preserved(name, R, rng):
    X, Y = gen.random_complex(R, rng), gen.random_complex(R, rng)
    assert X.squares_to_zero()
    assert X.shift(3).squares_to_zero()
    assert hom_complex(X, Y).squares_to_zero()
    assert tensor_complex(X, Y).squares_to_zero()
    assert hom_complex(X, module_complex(residue_field_module(R))).squares_to_zero()


@pytest.mark.parametrize("name,R,rng", list(gen.cases(12, seed=2)))
def test_shift_law(name, R, rng):
    X = gen.random_complex(R, rng)
    k = int(rng.integers(-2, 3))
    Y = X.shift(k)
    w = X.window()
    for j in range(X.lo - 1, X.hi + 2):
        assert hdims(Y, j + k, w) == hdims(X, j, w)


def test_naive_hom_signs_fail_somewhere():
    # without the Koszul sign the "differential" of Hom(X, Y) need not square to zero
    R = gen.rings()["ci"]
    X = tensor_complex(gen.koszul(R, "x", 1), gen.koszul(R, "y", 1))
    Y = tensor_complex(gen.koszul(R, "x", 1), gen.koszul(R, "y", 1))
    assert hom_complex(X, Y).squares_to_zero()
    assert not hom_complex(X, Y, koszul_signs=False).squares_to_zero()


def test_koszul_on_regular_sequence():
    # over k[x,y]/(x^2,y^2) the Koszul complex on x, y has homology only at the ends
    R = gen.rings()["ciq"]
    K = tensor_complex(gen.koszul(R, "x", 1), gen.koszul(R, "y", 1))
    w = range(0, 5)
    assert sum(hdims(K, 0, w)) == 1  # R/(x,y) = k
    assert sum(hdims(K, 1, w)) == 2
    assert sum(hdims(K, 2, w)) == 1  # socle xy


@pytest.mark.parametrize("name,R,rng", list(gen.cases(8, seed=3)))
def test_additivity(name, R, rng):
    X, Y = gen.random_complex(R, rng), gen.random_complex(R, rng)
    S = direct_sum_complex(X, Y)
    w = span(X, Y)
    for i in range(min(X.lo, Y.lo) - 1, max(X.hi, Y.hi) + 2):
        assert hdims(S, i, w) == [a + b for a, b in zip(hdims(X, i, w), hdims(Y, i, w))]


@pytest.mark.parametrize("name,R,rng", list(gen.cases(8, seed=4)))
def test_tensor_hom_adjunction_slices(name, R, rng):
    X, Y = gen.random_complex(R, rng), gen.random_complex(R, rng)
    Z = module_complex(free_module(R, [0]))
    lhs = hom_complex(tensor_complex(X, Y), Z)
    rhs = hom_complex(X, hom_complex(Y, Z))
    w = span(lhs, rhs)
    for i in range(min(lhs.lo, rhs.lo), max(lhs.hi, rhs.hi) + 1):
        assert [lhs.term(i).dim(d) for d in w] == [rhs.term(i).dim(d) for d in w]
        assert hdims(lhs, i, w) == hdims(rhs, i, w)


@pytest.mark.parametrize("name,R,rng", list(gen.cases(8, seed=5)))
def test_inf_adds_under_tensor(name, R, rng):
    (F, _), (G, _) = gen.random_resolution(R, rng), gen.random_resolution(R, rng)
    a, b = int(rng.integers(-2, 3)), int(rng.integers(-2, 3))
    F, G = F.shift(a), G.shift(b)
    T = tensor_complex(F, G)
    w = span(F, G, T)
    assert sup_inf(T, w)[1] == sup_inf(F, w)[1] + sup_inf(G, w)[1] == a + b


def test_acyclic_sup_inf():
    R = gen.rings()["gor"]
    D = RMatrix.identity(free_module(R, [0]).gens)
    X = free_complex(R, {0: [0], 1: [0]}, {1: D})
    assert sup_inf(X, range(0, 3)) == (-math.inf, math.inf)


@pytest.mark.parametrize("name,R,rng", list(gen.cases(8, seed=6)))
def test_betti_two_routes(name, R, rng):
    _, M = gen.random_resolution(R, rng)
    res = minimal_free_resolution(M, 3)
    assert tor_dims(M, 3) == [res.free[i].rank for i in range(4)]


def test_identity_is_quasiiso_and_zero_is_not():
    R = gen.rings()["ci"]
    X = gen.koszul(R, "x", 1)
    ident = ChainMap(X, X, {i: RMatrix.identity(X.term(i).gens) for i in X.indices})
    zero = ChainMap(X, X, {i: RMatrix(X.term(i).gens, X.term(i).gens) for i in X.indices})
    w = range(0, 4)
    assert ident.is_chain_map(w) and morphism_is_quasiiso(ident, w)
    assert not morphism_is_quasiiso(zero, w)


def test_rejects_non_complex():
    R = gen.rings()["ci"]
    A = RMatrix.from_polynomials(R, [1], [0], [["x"]])
    B = RMatrix.from_polynomials(R, [1], [1], [["1"]])
    with pytest.raises(ValueError):
        free_complex(R, {0: [0], 1: [1], 2: [1]}, {1: A, 2: B})
