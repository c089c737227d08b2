"""Exact dense linear algebra over GF(p) and the rationals.

Matrices are plain numpy arrays: ``int64`` with canonical residues
``0..p-1`` for prime fields, ``object`` arrays of :class:`fractions.Fraction`
for the rationals.  A field object owns every operation that needs to know
the arithmetic, so the rest of the package can stay field-agnostic.
"""
from fractions import Fraction

import numpy as np

from . import _kernels

_FLOAT_EXACT = 2**53
_INT64_SAFE = 2**63 - 1


class Field:
    """Common surface of :class:`PrimeField` and :class:`Rationals`."""

    dtype = None
    characteristic = 0

    def zeros(self, shape):
        return np.zeros(shape, dtype=self.dtype)

    def eye(self, n):
        out = self.zeros((n, n))
        out[np.arange(n), np.arange(n)] = 1
        return out

    def rank(self, A):
        return len(self.rref(A)[1])

    def kernel_basis(self, A):
        """Columns spanning the right null space of ``A``."""
        A = self.array(A)
        m, n = A.shape
        R, piv = self.rref(A)
        pivset = set(piv)
        free = [c for c in range(n) if c not in pivset]
        K = self.zeros((n, len(free)))
        if free:
            K[free, np.arange(len(free))] = 1
            if piv:
                K[piv, :] = self.reduce(-R[: len(piv)][:, free])
        return K

    def solve_right(self, A, B):
        """Some ``X`` with ``A @ X == B``, or ``None`` when inconsistent."""
        A = self.array(A)
        B = self.array(B)
        if B.ndim == 1:
            B = B.reshape(-1, 1)
        if A.shape[0] != B.shape[0]:
            raise ValueError(f"row counts differ: {A.shape[0]} vs {B.shape[0]}")
        n = A.shape[1]
        R, piv = self.rref(np.hstack([A, B]))
        if any(p >= n for p in piv):
            return None
        X = self.zeros((n, B.shape[1]))
        for r, p in enumerate(piv):
            X[p] = R[r, n:]
        return X

    def independent_columns(self, A):
        """Greedy left-to-right choice of columns spanning the column space."""
        if A.shape[1] == 0 or A.shape[0] == 0:
            return []
        return self.rref(A)[1]

    def image_basis(self, A):
        cols = self.independent_columns(A)
        return A[:, cols]


class PrimeField(Field):
    dtype = np.int64

    def __init__(self, p):
        p = int(p)
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"characteristic must be a prime, got {p}")
        if p >= 2**31:
            raise ValueError("prime fields are limited to p < 2^31")
        self.p = p
        self.characteristic = p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    @property
    def name(self):
        return f"GF {self.p}"

    def scalar(self, x):
        if isinstance(x, Fraction):
            return int(x.numerator) * pow(int(x.denominator), -1, self.p) % self.p
        return int(x) % self.p

    def array(self, data):
        if isinstance(data, np.ndarray) and data.dtype == np.int64:
            return data % self.p
        arr = np.asarray(data)
        if arr.dtype == object:
            return np.vectorize(self.scalar, otypes=[np.int64])(arr) if arr.size else arr.astype(np.int64)
        return np.asarray(arr, dtype=np.int64) % self.p

    def reduce(self, A):
        return A % self.p

    def inv(self, a):
        return pow(int(a), -1, self.p)

    def matmul(self, A, B):
        k = A.shape[-1]
        b = k * (self.p - 1) ** 2
        if b < _FLOAT_EXACT:
            out = np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64)
        elif b < _INT64_SAFE:
            out = A @ B
        else:
            out = (A.astype(object) @ B.astype(object)).astype(np.int64)
        return out % self.p

    def tensordot(self, A, B, axes):
        inner = 1
        for ax in np.atleast_1d(axes[0]):
            inner *= A.shape[ax]
        if inner * (self.p - 1) ** 2 < _INT64_SAFE:
            out = np.tensordot(A, B, axes=axes)
        else:
            out = np.tensordot(A.astype(object), B.astype(object), axes=axes).astype(np.int64)
        return out % self.p

    def rref(self, A):
        R = np.array(A, dtype=np.int64) % self.p
        if R.size == 0:
            return R, []
        rank, piv = _kernels.rref_modp(R, self.p)
        return R, [int(c) for c in piv[:rank]]


class Rationals(Field):
    dtype = object
    characteristic = 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    @property
    def name(self):
        return "QQ"

    def scalar(self, x):
        return Fraction(x)

    def array(self, data):
        arr = np.array(data, dtype=object)
        if arr.size:
            flat = arr.reshape(-1)
            for i, x in enumerate(flat):
                if not isinstance(x, Fraction):
                    flat[i] = Fraction(x)
        return arr

    def zeros(self, shape):
        arr = np.empty(shape, dtype=object)
        arr.fill(Fraction(0))
        return arr

    def eye(self, n):
        out = self.zeros((n, n))
        for i in range(n):
            out[i, i] = Fraction(1)
        return out

    def reduce(self, A):
        return A

    def inv(self, a):
        return 1 / Fraction(a)

    def matmul(self, A, B):
        if A.shape[-1] == 0:
            batch = np.broadcast_shapes(A.shape[:-2], B.shape[:-2])
            return self.zeros(batch + A.shape[-2:-1] + B.shape[-1:])
        return self.array(A @ B)

    def tensordot(self, A, B, axes):
        out = np.tensordot(A, B, axes=axes)
        if not out.shape:
            return out
        if out.dtype != object:
            out = out.astype(object)
        return out

    def rref(self, A):
        R = self.array(A).copy()
        if R.size == 0:
            return R, []
        m, n = R.shape
        pivots = []
        r = 0
        for c in range(n):
            if r == m:
                break
            nz = [i for i in range(r, m) if R[i, c] != 0]
            if not nz:
                continue
            piv = nz[0]
            if piv != r:
                R[[r, piv]] = R[[piv, r]]
            R[r] = R[r] / R[r, c]
            for i in range(m):
                if i != r and R[i, c] != 0:
                    R[i] = R[i] - R[i, c] * R[r]
            pivots.append(c)
            r += 1
        return R, pivots


QQ = Rationals()


def GF(p):
    return PrimeField(p)
