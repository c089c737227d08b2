"""Bounded complexes of graded modules, Hom/tensor/shift, and degreewise homology.

A complex stores one :class:`Module` per homological index and each
differential as a homogeneous matrix between the generator free modules of
consecutive terms.  For complexes of free modules the terms have no
relations; Hom into a module and tensor with a module produce terms that are
direct sums of twisted copies of it.
"""
import math

import numpy as np

from .modules import DirectSum, FreeModule, Module, RMatrix, block, kron_left, kron_right, tensor_module


def _zero_module(R):
    return Module(FreeModule(R, []))


class Complex:
    def __init__(self, R, terms, diffs=None, check=True):
        self.R = R
        self.terms = {int(i): M for i, M in terms.items()}
        self.diffs = {}
        for i, D in (diffs or {}).items():
            src, tgt = self.term(i).gens, self.term(i - 1).gens
            if D.src != src or D.tgt != tgt:
                raise ValueError(f"differential {i} does not match the terms")
            self.diffs[int(i)] = D
        if check and not self.squares_to_zero():
            raise ValueError("differential does not square to zero")

    def __repr__(self):
        body = ", ".join(f"{i}: {list(self.term(i).gens.shifts)}" for i in range(self.lo, self.hi + 1))
        return f"Complex({{{body}}})"

    @property
    def indices(self):
        return sorted(i for i, M in self.terms.items() if M.gens.rank)

    @property
    def lo(self):
        idx = self.indices
        return idx[0] if idx else 0

    @property
    def hi(self):
        idx = self.indices
        return idx[-1] if idx else -1

    def term(self, i):
        M = self.terms.get(i)
        if M is None:
            M = _zero_module(self.R)
            self.terms[i] = M
        return M

    def diff(self, i):
        D = self.diffs.get(i)
        if D is None:
            D = RMatrix(self.term(i).gens, self.term(i - 1).gens)
            self.diffs[i] = D
        return D

    @property
    def is_free(self):
        return all(self.term(i).is_free for i in self.indices)

    def ranks(self):
        return {i: self.term(i).gens.rank for i in self.indices}

    def squares_to_zero(self, degrees=None):
        """``d_{i-1} d_i = 0``: exact on entries for free terms, on slices otherwise."""
        for i in range(self.lo + 1, self.hi + 1):
            A, B = self.diff(i), self.diff(i - 1)
            if A.E.size == 0 or B.E.size == 0:
                continue
            tgt = self.term(i - 2)
            if tgt.is_free:
                if not (B @ A).is_zero():
                    return False
                continue
            C = B @ A
            for d in degrees if degrees is not None else self.degrees(i):
                X = tgt.project(d, C.slice(d)[:, self.term(i).lift_index(d)])
                if np.any(X != 0):
                    return False
        return True

    def degrees(self, i):
        """Internal degrees where term ``i`` can be nonzero (artinian rings only)."""
        lo, hi = self.term(i).support()
        if hi is None:
            raise ValueError("term is unbounded in internal degree; pass explicit degrees")
        return range(lo, hi + 1)

    def window(self):
        """Union of the term supports, for artinian rings."""
        lo, hi = math.inf, -math.inf
        for i in self.indices:
            a, b = self.term(i).support()
            if b is None:
                raise ValueError("term is unbounded in internal degree; pass explicit degrees")
            lo, hi = min(lo, a), max(hi, b)
        return range(lo, hi + 1) if lo <= hi else range(0)

    # -- homology --------------------------------------------------------
    def _matrix(self, i, d):
        """Differential ``i`` on quotient coordinates at degree ``d``."""
        src, tgt = self.term(i), self.term(i - 1)
        S = self.diff(i).slice(d)
        return tgt.project(d, S[:, src.lift_index(d)])

    def homology(self, i, degrees):
        """``{d: (dim H_i(X)_d, cycle representatives)}`` over ``degrees``."""
        K = self.R.field
        out = {}
        for d in degrees:
            n = self.term(i).dim(d)
            if n == 0:
                out[d] = (0, K.zeros((0, 0)))
                continue
            A = self._matrix(i, d)
            B = self._matrix(i + 1, d)
            Z = K.kernel_basis(A) if A.shape[0] else K.eye(n)
            if Z.shape[1] == 0:
                out[d] = (0, Z)
                continue
            _, piv = K.rref(np.hstack([B, Z]))
            reps = [p - B.shape[1] for p in piv if p >= B.shape[1]]
            out[d] = (len(reps), Z[:, reps])
        return out

    def homology_dims(self, i, degrees):
        return {d: h for d, (h, _) in self.homology(i, degrees).items()}

    def shift(self, k):
        """``Sigma^k``: terms move up by ``k`` and differentials pick up ``(-1)^k``."""
        sign = -1 if k % 2 else 1
        terms = {i + k: M for i, M in self.terms.items()}
        diffs = {i + k: D.scale(sign) for i, D in self.diffs.items()}
        return Complex(self.R, terms, diffs, check=False)

    def twist(self, s):
        terms = {i: M.twist(s) for i, M in self.terms.items()}
        diffs = {}
        for i, D in self.diffs.items():
            diffs[i] = RMatrix(terms[i].gens, terms[i - 1].gens, D.E)
        return Complex(self.R, terms, diffs, check=False)


def module_complex(M, index=0):
    return Complex(M.R, {index: M}, check=False)


def free_complex(R, shifts, diffs):
    """Complex of free modules from ``{i: shifts}`` and ``{i: RMatrix}``."""
    terms = {i: Module(FreeModule(R, s)) for i, s in shifts.items()}
    fixed = {}
    for i, D in diffs.items():
        fixed[i] = RMatrix(terms[i].gens, terms.get(i - 1, _zero_module(R)).gens, D.E)
    for i in diffs:
        terms.setdefault(i - 1, _zero_module(R))
    return Complex(R, terms, fixed)


def sup_inf(X, degrees):
    """``(sup, inf)`` of the homology over ``degrees``; ``(-inf, inf)`` when acyclic."""
    nonzero = [i for i in range(X.lo, X.hi + 1) if any(X.homology_dims(i, degrees).values())]
    if not nonzero:
        return (-math.inf, math.inf)
    return (max(nonzero), min(nonzero))


def direct_sum_complex(X, Y):
    R = X.R
    idx = sorted(set(X.indices) | set(Y.indices))
    terms = {i: DirectSum([(X.term(i), 0), (Y.term(i), 0)], R=R) for i in idx}
    terms_full = dict(terms)
    diffs = {}
    for i in idx:
        if i - 1 not in terms_full:
            continue
        A, B = X.diff(i), Y.diff(i)
        src = [X.term(i).gens, Y.term(i).gens]
        tgt = [X.term(i - 1).gens, Y.term(i - 1).gens]
        D = block([[A, None], [None, B]], src, tgt)
        diffs[i] = RMatrix(terms[i].gens, terms[i - 1].gens, D.E)
    return Complex(R, terms, diffs, check=False)


# ---------------------------------------------------------------------------
# Hom and tensor complexes


def hom_complex(X, Y, koszul_signs=True):
    """``Hom(X, Y)`` for ``X`` a complex of free modules.

    ``Hom_n = (+)_j Hom(X_j, Y_{j+n})`` with ``(d phi)_j = dY phi_j - (-1)^n phi_{j-1} dX_j``.
    With ``koszul_signs=False`` the second term enters with sign ``+1``, which is
    the naive ``Hom(dX, Y)`` and only a differential when ``Y`` sits in one index.
    """
    if not X.is_free:
        raise ValueError("the first argument of hom_complex must be a complex of free modules")
    R = X.R
    xs = X.indices
    ys = Y.indices
    if not xs or not ys:
        return Complex(R, {})
    n_lo, n_hi = ys[0] - xs[-1], ys[-1] - xs[0]
    terms, parts, comps = {}, {}, {}
    for n in range(n_lo - 1, n_hi + 2):
        summands, fparts, cidx = [], [], []
        for j in xs:
            if j + n not in ys:
                continue
            Yt = Y.term(j + n)
            summands.extend((Yt, a) for a in X.term(j).gens.shifts)
            fparts.append(X.term(j).gens.dual().tensor(Yt.gens))
            cidx.append(j)
        terms[n] = DirectSum(summands, R=R)
        parts[n] = fparts
        comps[n] = cidx
    diffs = {}
    for n in range(n_lo, n_hi + 1):
        if not comps[n]:
            continue
        src_j, tgt_j = comps[n], comps[n - 1]
        rows = [[None] * len(src_j) for _ in tgt_j]
        pre_sign = (-1 if n % 2 == 0 else 1) if koszul_signs else 1
        for c, j in enumerate(src_j):
            if j in tgt_j:
                post = kron_left(X.term(j).gens.dual(), Y.diff(j + n))
                rows[tgt_j.index(j)][c] = post
            if j + 1 in tgt_j:
                dx = X.diff(j + 1)
                pre = kron_right(dx.transpose(), Y.term(j + n).gens)
                rows[tgt_j.index(j + 1)][c] = pre.scale(pre_sign)
        if not tgt_j:
            continue
        D = block(rows, parts[n], parts[n - 1])
        diffs[n] = RMatrix(terms[n].gens, terms[n - 1].gens, D.E)
    return Complex(R, {n: M for n, M in terms.items() if n_lo <= n <= n_hi}, diffs, check=False)


def tensor_complex(X, Y):
    """``(X (x) Y)_n = (+)_j X_j (x) Y_{n-j}`` with ``d(x (x) y) = dx (x) y + (-1)^j x (x) dy``."""
    R = X.R
    xs, ys = X.indices, Y.indices
    if not xs or not ys:
        return Complex(R, {})
    n_lo, n_hi = xs[0] + ys[0], xs[-1] + ys[-1]
    terms, parts, comps = {}, {}, {}
    for n in range(n_lo - 1, n_hi + 1):
        summands, fparts, cidx = [], [], []
        for j in xs:
            if n - j not in ys:
                continue
            Xj, Yt = X.term(j), Y.term(n - j)
            if Xj.is_free:
                comp = DirectSum([(Yt, -a) for a in Xj.gens.shifts], R=R)
            else:
                comp = tensor_module(Xj, Yt)
            summands.append((comp, 0))
            fparts.append(Xj.gens.tensor(Yt.gens))
            cidx.append(j)
        terms[n] = DirectSum(summands, R=R)
        parts[n] = fparts
        comps[n] = cidx
    diffs = {}
    for n in range(n_lo, n_hi + 1):
        src_j, tgt_j = comps[n], comps[n - 1]
        if not src_j or not tgt_j:
            continue
        rows = [[None] * len(src_j) for _ in tgt_j]
        for c, j in enumerate(src_j):
            if j - 1 in tgt_j:
                rows[tgt_j.index(j - 1)][c] = kron_right(X.diff(j), Y.term(n - j).gens)
            if j in tgt_j:
                dy = kron_left(X.term(j).gens, Y.diff(n - j))
                rows[tgt_j.index(j)][c] = dy.scale(-1) if j % 2 else dy
        D = block(rows, parts[n], parts[n - 1])
        diffs[n] = RMatrix(terms[n].gens, terms[n - 1].gens, D.E)
    return Complex(R, {n: M for n, M in terms.items() if n >= n_lo}, diffs, check=False)


# ---------------------------------------------------------------------------
# morphisms


class ChainMap:
    """Per-index homogeneous matrices ``F0(X_i) -> F0(Y_i)``."""

    def __init__(self, X, Y, maps):
        self.X, self.Y = X, Y
        self.maps = {}
        for i, f in maps.items():
            if f.src != X.term(i).gens or f.tgt != Y.term(i).gens:
                raise ValueError(f"map at index {i} does not match the terms")
            self.maps[i] = f

    def at(self, i):
        f = self.maps.get(i)
        if f is None:
            f = RMatrix(self.X.term(i).gens, self.Y.term(i).gens)
        return f

    def _indices(self):
        idx = set(self.X.indices) | set(self.Y.indices)
        return range(min(idx), max(idx) + 1) if idx else range(0)

    def slice(self, i, d):
        """Induced map on quotient coordinates at internal degree ``d``."""
        src, tgt = self.X.term(i), self.Y.term(i)
        return tgt.project(d, self.at(i).slice(d)[:, src.lift_index(d)])

    def is_chain_map(self, degrees):
        K = self.X.R.field
        for i in self._indices():
            for d in degrees:
                if self.X.term(i).dim(d) == 0:
                    continue
                left = K.matmul(self.Y._matrix(i, d), self.slice(i, d))
                right = K.matmul(self.slice(i - 1, d), self.X._matrix(i, d))
                if np.any(K.reduce(left - right) != 0):
                    return False
        return True


def morphism_is_quasiiso(f, degrees):
    """Does ``f`` induce isomorphisms ``H_i(X)_d -> H_i(Y)_d`` for all ``i`` and ``d``?"""
    if not f.is_chain_map(degrees):
        raise ValueError("not a chain map")
    K = f.X.R.field
    for i in f._indices():
        hx = f.X.homology(i, degrees)
        hy = f.Y.homology_dims(i, degrees)
        for d in degrees:
            h, reps = hx[d]
            if h != hy[d]:
                return False
            if h == 0:
                continue
            B = f.Y._matrix(i + 1, d)
            img = K.matmul(f.slice(i, d), reps)
            if K.rank(np.hstack([img, B])) - K.rank(B) != h:
                return False
    return True
