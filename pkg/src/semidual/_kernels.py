"""Row-reduction kernels over GF(p).

Two implementations share one contract: ``rref_modp(A, p)`` reduces the
int64 array ``A`` in place and returns ``(rank, pivots)``.  The numba path
is used when numba imports cleanly and ``SDC_NUMBA`` is not set to ``0``;
the pure-numpy path is always available as ``rref_modp_numpy``.
"""
import os

import numpy as np


def _modinv_py(a, p):
    return pow(int(a), -1, int(p))


def rref_modp_numpy(A, p):
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * _modinv_py(A[r, c], p)) % p
        rows = np.flatnonzero(A[:, c])
        rows = rows[rows != r]
        if rows.size:
            A[rows] = (A[rows] - np.outer(A[rows, c], A[r])) % p
        pivots.append(c)
        r += 1
    return r, np.array(pivots, dtype=np.int64)


try:
    if os.environ.get("SDC_NUMBA", "1") == "0":
        raise ImportError("numba disabled by SDC_NUMBA=0")
    from numba import njit
except ImportError:
    njit = None


if njit is not None:

    @njit(cache=True)
    def _modinv_nb(a, p):
        t, newt = 0, 1
        r, newr = p, a
        while newr != 0:
            q = r // newr
            t, newt = newt, t - q * newt
            r, newr = newr, r - q * newr
        if t < 0:
            t += p
        return t

    @njit(cache=True)
    def _rref_modp_nb(A, p):
        m, n = A.shape
        pivots = np.empty(min(m, n), dtype=np.int64)
        r = 0
        for c in range(n):
            if r == m:
                break
            piv = -1
            for i in range(r, m):
                if A[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, n):
                    tmp = A[r, j]
                    A[r, j] = A[piv, j]
                    A[piv, j] = tmp
            inv = _modinv_nb(A[r, c], p)
            for j in range(c, n):
                A[r, j] = (A[r, j] * inv) % p
            for i in range(m):
                if i != r:
                    f = A[i, c]
                    if f != 0:
                        for j in range(c, n):
                            A[i, j] = (A[i, j] - f * A[r, j]) % p
            pivots[r] = c
            r += 1
        return r, pivots[:r].copy()

    def rref_modp(A, p):
        return _rref_modp_nb(A, np.int64(p))

    BACKEND = "numba"
else:
    rref_modp = rref_modp_numpy
    BACKEND = "numpy"
