from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from semidual import GF, QQ, PrimeField


def small_matrices(max_side=5, lo=-4, hi=4):
    return st.integers(1, max_side).flatmap(
        lambda m: st.integers(1, max_side).flatmap(
            lambda n: st.lists(st.lists(st.integers(lo, hi), min_size=n, max_size=n), min_size=m, max_size=m)
        )
    )


@settings(max_examples=80, deadline=None)
@given(small_matrices())
def test_rank_matches_sympy_over_rationals(rows):
    A = QQ.array(rows)
    assert QQ.rank(A) == sympy.Matrix(rows).rank()


@settings(max_examples=80, deadline=None)
@given(small_matrices(), st.sampled_from([2, 5, 101]))
def test_kernel_is_kernel(rows, p):
    for K in (QQ, GF(p)):
        A = K.array(rows)
        Z = K.kernel_basis(A)
        assert Z.shape == (A.shape[1], A.shape[1] - K.rank(A))
        assert not np.any(K.matmul(A, Z) != 0)
        assert K.rank(Z) == Z.shape[1]


@settings(max_examples=50, deadline=None)
@given(small_matrices(4, -3, 3))
def test_rank_mod_p_matches_sympy(rows):
    M = sympy.Matrix(rows)
    # sympy's rank over GF(p) via the domain machinery
    from sympy.polys.matrices import DomainMatrix
    from sympy import GF as sGF

    expected = DomainMatrix.from_Matrix(M).convert_to(sGF(5)).rank()
    assert GF(5).rank(GF(5).array(rows)) == expected


def test_rationals_are_exact():
    A = QQ.array([[1, 3], [3, 9 + Fraction(1, 10**30)]])
    assert QQ.rank(A) == 2
    x = QQ.solve_right(A, QQ.array([[1], [0]]))
    assert np.all(QQ.matmul(A, x) == QQ.array([[1], [0]]))


def test_scalar_inverse():
    K = GF(7)
    assert all(K.inv(a) * a % 7 == 1 for a in range(1, 7))
    assert QQ.inv(Fraction(3, 4)) == Fraction(4, 3)
    with pytest.raises(ValueError):
        PrimeField(12)


def test_empty_matmul_batches():
    A = QQ.zeros((3, 2, 0))
    B = QQ.zeros((3, 0, 4))
    assert QQ.matmul(A, B).shape == (3, 2, 4)
