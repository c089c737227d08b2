import numpy as np
import pytest

from semidual import (
    RMatrix,
    direct_sum,
    free_module,
    hom_module,
    matlis_dual,
    presented_module,
    residue_field_module,
    tensor_module,
)
from semidual.modules import FreeModule, minimal_generators

import _kspace


def type4_c(R):
    return presented_module(R, [0, 0], [["y", "0"], ["0", "x"], ["x", "-y"]], name="C")


def zoo(R, with_c=False):
    mods = [free_module(R, [0], name="R"), residue_field_module(R), matlis_dual(R), free_module(R, [0, 1], name="R+R(-1)")]
    if with_c:
        mods.append(type4_c(R))
    return mods


def test_hom_and_tensor_against_kspace_m2(m2):
    mods = zoo(m2)
    for A in mods:
        for B in mods:
            H, T = hom_module(A, B), tensor_module(A, B)
            for d in range(-3, 4):
                assert H.dim(d) == _kspace.hom_dim(A, B, d), (A, B, d)
                assert T.dim(d) == _kspace.tensor_dim(A, B, d), (A, B, d)


def test_hom_against_kspace_type4(type4):
    C = type4_c(type4)
    for A, B in [(C, C), (C, matlis_dual(type4)), (residue_field_module(type4), C)]:
        H = hom_module(A, B)
        for d in range(-2, 3):
            assert H.dim(d) == _kspace.hom_dim(A, B, d)


def test_hilbert_function_of_presentations(type4, m2):
    C = type4_c(type4)
    assert [C.dim(d) for d in range(4)] == [2, 5, 2, 0]
    assert [matlis_dual(m2).dim(d) for d in range(3)] == [2, 1, 0]


def test_hom_from_free_is_evaluation(ex_gf):
    k = residue_field_module(ex_gf)
    R = free_module(ex_gf, [0])
    H = hom_module(R, k)
    assert [H.dim(d) for d in range(3)] == [1, 0, 0]
    S = hom_module(k, R)
    assert [S.dim(d) for d in range(4)] == [0, 1, 0, 0]


def test_twist_and_direct_sum(m2):
    D = matlis_dual(m2)
    k = residue_field_module(m2)
    assert [D.twist(1).dim(d) for d in range(-1, 2)] == [2, 1, 0]
    S = direct_sum([D, k])
    assert [S.dim(d) for d in range(3)] == [3, 1, 0]
    assert len(minimal_generators(S)) == 3


def test_rmatrix_composition_associative(m2):
    F0, F1, F2, F3 = (FreeModule(m2, s) for s in ([0], [1, 1], [1, 2], [2, 2]))
    A = RMatrix.from_polynomials(m2, [1, 1], [0], [["x", "y"]])
    B = RMatrix.from_polynomials(m2, [1, 2], [1, 1], [["1", "x"], ["0", "y"]])
    C = RMatrix.from_polynomials(m2, [2, 2], [1, 2], [["y", "x+y"], ["0", "3"]])
    assert ((A @ B) @ C) == (A @ (B @ C))


def test_inhomogeneous_relation_rejected(m2):
    with pytest.raises(ValueError):
        presented_module(m2, [0, 0], [["x", "1"]])


def test_minimal_generators_of_dual(m2):
    g = minimal_generators(matlis_dual(m2))
    assert sorted(g.degrees) == [0, 0]
