"""Connected graded quotient algebras ``k[x_1..x_n]/I``, built degree by degree.

For a homogeneous ideal the degree-``d`` slice ``I_d`` is spanned by the
degree-``d`` generators together with ``x_v * I_{d - deg x_v}``, so every
slice is an ordinary row reduction and no Groebner basis is needed.
Columns are ordered greatest-lex first, which makes the quotient basis
consist of the smallest surviving monomials.
"""
from dataclasses import dataclass, field

import numpy as np

from .polynomials import parse_polynomial, weighted_degree
from .series import LaurentPolyZ


class WindowError(ValueError):
    """A computation needed ring data above the truncation degree."""

    def __init__(self, degree, dmax):
        super().__init__(f"degree {degree} exceeds the truncation window (Dmax={dmax})")
        self.degree = degree
        self.dmax = dmax


def monomials_of_degree(d, degrees):
    """Exponent tuples of weighted degree ``d``, greatest-lex first."""
    n = len(degrees)
    out = []

    def rec(i, left, prefix):
        if i == n - 1:
            if left % degrees[i] == 0:
                out.append(prefix + (left // degrees[i],))
            return
        for e in range(left // degrees[i], -1, -1):
            rec(i + 1, left - e * degrees[i], prefix + (e,))

    if n == 0:
        return [()] if d == 0 else []
    rec(0, d, ())
    return out


@dataclass(frozen=True)
class RingElement:
    """Homogeneous element: degree plus coordinates in the basis of ``R_deg``."""

    degree: int
    vector: np.ndarray = field(compare=False)

    def is_zero(self):
        return not np.any(self.vector != 0)


class GradedAlgebra:
    """Truncated connected graded algebra with fully materialized tables.

    Attributes of note: ``dims[d]`` is ``dim R_d`` for ``0 <= d <= dmax``;
    ``basis[d]`` lists the quotient-basis monomials of ``R_d``; ``artinian``
    is set when the vanishing of ``R_d`` above ``top`` is certified, while
    ``artinian_in_window`` records the weaker observation that the slices
    vanish up to ``dmax`` without enough margin to prove it.
    """

    def __init__(self, field_, varnames, generators, dmax, degrees=None):
        self.field = field_
        self.varnames = tuple(varnames)
        self.nvars = len(self.varnames)
        self.degrees = tuple(degrees) if degrees is not None else (1,) * self.nvars
        if len(self.degrees) != self.nvars or any(int(w) < 1 for w in self.degrees):
            raise ValueError("variable degrees must be positive integers, one per variable")
        if dmax < 0:
            raise ValueError("truncation degree must be nonnegative")
        self.dmax = int(dmax)
        self.generators = []
        for g in generators:
            g = {m: c for m, c in g.items() if field_.scalar(c) != 0}
            if not g:
                continue
            degs = {weighted_degree(m, self.degrees) for m in g}
            if len(degs) != 1:
                raise ValueError(f"ideal generator is not homogeneous: degrees {sorted(degs)}")
            if degs == {0}:
                raise ValueError("ideal contains a unit; the quotient is not connected")
            self.generators.append(g)
        self.generator_degrees = sorted(weighted_degree(next(iter(g)), self.degrees) for g in self.generators)
        self.beyond_window = [e for e in self.generator_degrees if e > self.dmax]
        self._build()

    @classmethod
    def from_strings(cls, field_, varnames, ideal, dmax, degrees=None):
        gens = [parse_polynomial(s, varnames) for s in ideal if s.strip()]
        return cls(field_, varnames, gens, dmax, degrees)

    # -- construction --------------------------------------------------
    def _build(self):
        K = self.field
        self.monomials = []
        self.mono_index = []
        self.ideal_rows = []
        self.basis = []
        self.nf = []
        self.dims = []
        for d in range(self.dmax + 1):
            monos = monomials_of_degree(d, self.degrees)
            index = {m: i for i, m in enumerate(monos)}
            rows = []
            for g in self.generators:
                if weighted_degree(next(iter(g)), self.degrees) == d:
                    v = K.zeros(len(monos))
                    for m, c in g.items():
                        v[index[m]] = K.scalar(c)
                    rows.append(v)
            for v, w in enumerate(self.degrees):
                if d - w < 0:
                    continue
                prev = self.ideal_rows[d - w]
                if prev.shape[0] == 0:
                    continue
                target = [index[m[:v] + (m[v] + 1,) + m[v + 1:]] for m in self.monomials[d - w]]
                block = K.zeros((prev.shape[0], len(monos)))
                block[:, target] = prev
                rows.extend(block)
            if rows:
                R, piv = K.rref(np.array(rows, dtype=K.dtype).reshape(len(rows), len(monos)))
                R = R[: len(piv)]
            else:
                R, piv = K.zeros((0, len(monos))), []
            pivset = set(piv)
            free = [c for c in range(len(monos)) if c not in pivset]
            nf = K.zeros((len(free), len(monos)))
            nf[np.arange(len(free)), free] = 1
            if piv and free:
                nf[:, piv] = K.reduce(-R[:, free]).T
            self.monomials.append(monos)
            self.mono_index.append(index)
            self.ideal_rows.append(R)
            self.basis.append([monos[c] for c in free])
            self.nf.append(nf)
            self.dims.append(len(free))
        if self.dims[0] != 1:
            raise ValueError("R_0 must be one-dimensional")
        self._detect_artinian()
        top = self.top if self.artinian else self.dmax
        self.span = top
        self.offsets = np.cumsum([0] + self.dims[: top + 1]).tolist()
        self.N = self.offsets[-1]
        self.comp_degree = np.repeat(np.arange(top + 1), self.dims[: top + 1])
        self._mult = {}
        for a in range(top + 1):
            for b in range(a, top + 1 - a):
                self._mult[(a, b)] = self._table(a, b)

    def _detect_artinian(self):
        nz = [d for d in range(self.dmax + 1) if self.dims[d]]
        t = max(nz)
        wmax = max(self.degrees) if self.degrees else 1
        self.top_observed = t
        self.artinian = self.nvars == 0 or self.dmax >= t + wmax
        self.artinian_in_window = self.artinian or t < self.dmax
        self.top = t if self.artinian else None

    def _table(self, a, b):
        K = self.field
        da, db = self.dims[a], self.dims[b]
        c = a + b
        dc = self.dims[c] if c <= self.dmax else 0
        T = K.zeros((da, db, dc))
        if da and db and dc:
            idx = self.mono_index[c]
            cols = [[idx[tuple(x + y for x, y in zip(ma, mb))] for mb in self.basis[b]] for ma in self.basis[a]]
            T = self.nf[c][:, np.array(cols, dtype=np.int64)].transpose(1, 2, 0).copy()
        return T

    # -- queries ---------------------------------------------------------
    def dim(self, d):
        if d < 0:
            return 0
        if d > self.dmax:
            if self.artinian:
                return 0
            raise WindowError(d, self.dmax)
        return self.dims[d]

    def comp(self, d):
        """Slice of the full coordinate vector holding degree ``d``."""
        if d < 0 or d > self.span:
            return slice(0, 0)
        return slice(self.offsets[d], self.offsets[d + 1])

    def mult(self, a, b):
        """Table ``T[i, j, :]`` = product of basis ``i`` of ``R_a`` and ``j`` of ``R_b``."""
        da, db = self.dim(a), self.dim(b)
        c = a + b
        if c > self.span:
            if self.artinian:
                return self.field.zeros((da, db, 0))
            raise WindowError(c, self.dmax)
        if a <= b:
            return self._mult[(a, b)]
        return self._mult[(b, a)].transpose(1, 0, 2)

    def mul_matrix(self, r, a):
        """Matrix of multiplication by ``r`` from ``R_a`` to ``R_{a+deg r}``."""
        T = self.mult(r.degree, a)
        if T.shape[2] == 0 or T.shape[1] == 0:
            return self.field.zeros((T.shape[2], T.shape[1]))
        return self.field.tensordot(r.vector, T, axes=([0], [0])).T

    def normal_form(self, poly):
        """Coordinates of a homogeneous polynomial in the basis of its degree."""
        K = self.field
        poly = {m: c for m, c in poly.items() if K.scalar(c) != 0}
        if not poly:
            return RingElement(0, K.zeros(1))
        degs = {weighted_degree(m, self.degrees) for m in poly}
        if len(degs) != 1:
            raise ValueError("polynomial is not homogeneous")
        d = degs.pop()
        if d > self.dmax:
            if self.artinian:
                return RingElement(d, K.zeros(0))
            raise WindowError(d, self.dmax)
        v = K.zeros(len(self.monomials[d]))
        for m, c in poly.items():
            v[self.mono_index[d][m]] = K.reduce(v[self.mono_index[d][m]] + K.scalar(c))
        return RingElement(d, K.matmul(self.nf[d], v.reshape(-1, 1)).reshape(-1))

    def element(self, text):
        return self.normal_form(parse_polynomial(text, self.varnames))

    def variable(self, v):
        e = [0] * self.nvars
        e[v] = 1
        return self.normal_form({tuple(e): 1})

    def one(self):
        return RingElement(0, self.field.eye(1)[0])

    def multiply(self, a, b):
        T = self.mult(a.degree, b.degree)
        K = self.field
        if T.shape[2] == 0:
            return RingElement(a.degree + b.degree, K.zeros(0))
        out = K.tensordot(K.tensordot(a.vector, T, axes=([0], [0])), b.vector, axes=([0], [0]))
        return RingElement(a.degree + b.degree, out)

    def hilbert_coeffs(self, nmax):
        if nmax > self.dmax and not self.artinian:
            raise WindowError(nmax, self.dmax)
        return LaurentPolyZ(0, tuple(self.dim(d) for d in range(nmax + 1)), nmax)

    def socle_basis(self, window=None):
        """Homogeneous basis of ``{s : m s = 0}`` over the degrees in ``window``."""
        wmax = max(self.degrees) if self.nvars else 0
        limit = self.top if self.artinian else self.dmax - wmax
        lo, hi = window if window is not None else (0, limit)
        if not self.artinian and hi > self.dmax - wmax:
            raise WindowError(hi + wmax, self.dmax)
        K = self.field
        out = []
        for d in range(max(lo, 0), hi + 1):
            n = self.dim(d)
            if n == 0:
                continue
            blocks = [self.mul_matrix(self.variable(v), d) for v in range(self.nvars)]
            blocks = [b for b in blocks if b.shape[0]]
            if blocks:
                ker = K.kernel_basis(np.vstack(blocks))
            else:
                ker = K.eye(n)
            out.extend(RingElement(d, ker[:, j].copy()) for j in range(ker.shape[1]))
        return out

    def max_variable_degree(self):
        return max(self.degrees) if self.nvars else 0

    def __repr__(self):
        ideal = ", ".join(str(len(g)) for g in self.generators)
        return f"GradedAlgebra({self.field!r}, vars={self.varnames}, gens={len(self.generators)}, dmax={self.dmax})"


def build_algebra(field_, varnames, ideal, dmax, degrees=None):
    """Build ``field[varnames]/(ideal)`` truncated at ``dmax``; ``ideal`` holds strings or dicts."""
    gens = [parse_polynomial(g, varnames) if isinstance(g, str) else g for g in ideal]
    return GradedAlgebra(field_, varnames, gens, dmax, degrees)
