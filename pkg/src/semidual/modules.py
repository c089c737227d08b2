"""Graded free modules, homogeneous matrices and finitely presented modules.

A free module ``F = (+)_j R(-a_j)`` is described by its shifts.  Its degree-``d``
slice is ``(+)_j R_{d-a_j}`` with the ring's quotient bases concatenated in
generator order.  A homogeneous matrix ``F -> G`` stores each entry as a
coordinate vector over the whole truncated ring basis, supported in the
degree forced by the shifts.  A module is ``coker(rel: F1 -> F0)``.

Twists follow ``M(s)_d = M_{d+s}``, so ``R(-a)`` has its generator in degree
``a`` and shifts may be negative (Hom modules need that).
"""
from functools import cached_property

import numpy as np

from .polynomials import parse_polynomial
from .ring import WindowError


class FreeModule:
    """``(+)_j R(-a_j)``."""

    def __init__(self, R, shifts):
        self.R = R
        self.shifts = tuple(int(a) for a in shifts)
        self._off = {}

    @property
    def rank(self):
        return len(self.shifts)

    def __len__(self):
        return len(self.shifts)

    def __eq__(self, other):
        return isinstance(other, FreeModule) and other.R is self.R and other.shifts == self.shifts

    def __hash__(self):
        return hash((id(self.R), self.shifts))

    def __repr__(self):
        return f"FreeModule({list(self.shifts)})"

    def offsets(self, d):
        """Block starts of the generators inside the slice ``F_d`` (length rank+1)."""
        off = self._off.get(d)
        if off is None:
            sizes = [self.R.dim(d - a) for a in self.shifts]
            off = np.concatenate([[0], np.cumsum(sizes, dtype=np.int64)]).astype(np.int64)
            self._off[d] = off
        return off

    def dim(self, d):
        return int(self.offsets(d)[-1])

    def twist(self, s):
        return FreeModule(self.R, [a - s for a in self.shifts])

    def dual(self):
        return FreeModule(self.R, [-a for a in self.shifts])

    def __add__(self, other):
        return FreeModule(self.R, self.shifts + other.shifts)

    def tensor(self, other):
        return FreeModule(self.R, [a + b for a in self.shifts for b in other.shifts])

    def vector_to_entries(self, d, v):
        """Turn a slice vector ``v`` of ``F_d`` into one column of ring entries."""
        R = self.R
        col = R.field.zeros((self.rank, R.N))
        off = self.offsets(d)
        for j, a in enumerate(self.shifts):
            if off[j + 1] > off[j]:
                col[j, R.comp(d - a)] = v[off[j] : off[j + 1]]
        return col


class RMatrix:
    """Homogeneous matrix ``src -> tgt`` over R with ``E[i, j]`` in ``R_{a_j - b_i}``."""

    def __init__(self, src, tgt, E=None):
        self.src = src
        self.tgt = tgt
        self.R = src.R
        K = self.R.field
        self.E = K.zeros((tgt.rank, src.rank, self.R.N)) if E is None else E
        self._slices = {}

    @property
    def shape(self):
        return (self.tgt.rank, self.src.rank)

    def __repr__(self):
        return f"RMatrix({list(self.tgt.shifts)} <- {list(self.src.shifts)})"

    # -- constructors --------------------------------------------------
    @classmethod
    def identity(cls, F):
        M = cls(F, F)
        M.E[np.arange(F.rank), np.arange(F.rank), 0] = 1
        return M

    @classmethod
    def from_columns(cls, src, tgt, columns):
        """Columns given as ``(degree, slice vector of tgt)``; ``src`` shifts must match."""
        M = cls(src, tgt)
        for j, (d, v) in enumerate(columns):
            M.E[:, j, :] = tgt.vector_to_entries(d, v)
        return M

    @classmethod
    def from_polynomials(cls, R, src_shifts, tgt_shifts, rows):
        """``rows[i][j]`` is a polynomial (string or dict) of degree ``a_j - b_i``."""
        src, tgt = FreeModule(R, src_shifts), FreeModule(R, tgt_shifts)
        M = cls(src, tgt)
        for i, row in enumerate(rows):
            for j, p in enumerate(row):
                poly = parse_polynomial(p, R.varnames) if isinstance(p, str) else p
                if not poly:
                    continue
                el = R.normal_form(poly)
                want = src.shifts[j] - tgt.shifts[i]
                if el.degree != want:
                    raise ValueError(f"entry ({i},{j}) has degree {el.degree}, expected {want}")
                M.E[i, j, R.comp(el.degree)] = el.vector
        return M

    # -- structure -----------------------------------------------------
    def entry_degree(self, i, j):
        return self.src.shifts[j] - self.tgt.shifts[i]

    def is_zero(self):
        return not np.any(self.E != 0)

    def is_minimal(self):
        """No entry has a nonzero constant term, i.e. the image lies in m*tgt."""
        if self.E.size == 0:
            return True
        return not np.any(self.E[:, :, 0] != 0)

    def support_ok(self):
        """Every entry is supported only in its forced degree."""
        cd = self.R.comp_degree
        want = np.array(self.src.shifts, dtype=np.int64)[None, :] - np.array(self.tgt.shifts, dtype=np.int64)[:, None]
        for k in range(self.R.N):
            bad = (self.E[:, :, k] != 0) & (want != cd[k])
            if np.any(bad):
                return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, RMatrix)
            and self.src == other.src
            and self.tgt == other.tgt
            and bool(np.all(self.E == other.E))
        )

    __hash__ = None

    # -- arithmetic ------------------------------------------------------
    def _new(self, src, tgt, E):
        return RMatrix(src, tgt, self.R.field.reduce(E))

    def scale(self, c):
        K = self.R.field
        return self._new(self.src, self.tgt, self.E * K.scalar(c))

    def __neg__(self):
        return self.scale(-1)

    def __add__(self, other):
        if self.src != other.src or self.tgt != other.tgt:
            raise ValueError("shape or shift mismatch in matrix sum")
        return self._new(self.src, self.tgt, self.E + other.E)

    def __sub__(self, other):
        return self + (-other)

    def transpose(self):
        """The dual map ``tgt^* -> src^*``."""
        return RMatrix(self.tgt.dual(), self.src.dual(), self.E.transpose(1, 0, 2).copy())

    def twisted(self, s):
        return RMatrix(self.src.twist(s), self.tgt.twist(s), self.E)

    def columns(self, idx):
        idx = list(idx)
        return RMatrix(FreeModule(self.R, [self.src.shifts[j] for j in idx]), self.tgt, self.E[:, idx, :].copy())

    def __matmul__(self, other):
        """Composition ``self o other``."""
        if other.tgt != self.src:
            raise ValueError("composition of incompatible maps")
        R = self.R
        K = R.field
        out = K.zeros((self.tgt.rank, other.src.rank, R.N))
        if self.E.size == 0 or other.E.size == 0:
            return RMatrix(other.src, self.tgt, out)
        degs_b = sorted({int(e) for e in R.comp_degree[np.any(self.E != 0, axis=(0, 1))]})
        degs_a = sorted({int(e) for e in R.comp_degree[np.any(other.E != 0, axis=(0, 1))]})
        for eb in degs_b:
            B = self.E[:, :, R.comp(eb)]
            for ea in degs_a:
                A = other.E[:, :, R.comp(ea)]
                if ea + eb > R.span:
                    if R.artinian:
                        continue
                    nzb = np.any(B != 0, axis=2).astype(np.int64)
                    nza = np.any(A != 0, axis=2).astype(np.int64)
                    if np.any(nzb @ nza):
                        raise WindowError(ea + eb, R.dmax)
                    continue
                T = R.mult(eb, ea)
                if T.shape[2] == 0:
                    continue
                X = K.tensordot(B, T, axes=([2], [0]))  # (nt, nm, ra, rc)
                Y = K.tensordot(X, A, axes=([1, 2], [0, 2]))  # (nt, rc, ns)
                out[:, :, R.comp(ea + eb)] += Y.transpose(0, 2, 1)
        return RMatrix(other.src, self.tgt, K.reduce(out))

    # -- slices ----------------------------------------------------------
    def slice(self, d):
        """Dense matrix of the map ``src_d -> tgt_d``."""
        S = self._slices.get(d)
        if S is not None:
            return S
        R = self.R
        K = R.field
        so, to = self.src.offsets(d), self.tgt.offsets(d)
        S = K.zeros((int(to[-1]), int(so[-1])))
        if S.size:
            src_groups = _groups(self.src.shifts)
            tgt_groups = _groups(self.tgt.shifts)
            for a, cols in src_groups.items():
                ra = R.dim(d - a)
                if ra == 0:
                    continue
                for b, rows in tgt_groups.items():
                    e = a - b
                    rb = R.dim(d - b)
                    if e < 0 or rb == 0 or e > R.span:
                        continue
                    sub = self.E[np.ix_(rows, cols)][:, :, R.comp(e)]
                    if not np.any(sub != 0):
                        continue
                    T = R.mult(e, d - a)  # (re, ra, rb)
                    blk = K.tensordot(sub, T, axes=([2], [0]))  # (nb, na, ra, rb)
                    blk = blk.transpose(0, 3, 1, 2).reshape(len(rows) * rb, len(cols) * ra)
                    ridx = (to[rows][:, None] + np.arange(rb)).reshape(-1)
                    cidx = (so[cols][:, None] + np.arange(ra)).reshape(-1)
                    S[np.ix_(ridx, cidx)] = blk
        self._slices[d] = S
        return S


def _groups(shifts):
    out = {}
    for j, a in enumerate(shifts):
        out.setdefault(a, []).append(j)
    return {a: np.array(v, dtype=np.int64) for a, v in out.items()}


def hstack(mats, tgt=None):
    """``[A_1 | A_2 | ...]`` sharing a target."""
    if not mats:
        raise ValueError("hstack needs at least one matrix or an explicit target")
    tgt = mats[0].tgt
    for M in mats:
        if M.tgt != tgt:
            raise ValueError("hstack: targets differ")
    src = FreeModule(tgt.R, [a for M in mats for a in M.src.shifts])
    E = np.concatenate([M.E for M in mats], axis=1)
    return RMatrix(src, tgt, E)


def vstack(mats):
    src = mats[0].src
    for M in mats:
        if M.src != src:
            raise ValueError("vstack: sources differ")
    tgt = FreeModule(src.R, [b for M in mats for b in M.tgt.shifts])
    E = np.concatenate([M.E for M in mats], axis=0)
    return RMatrix(src, tgt, E)


def block_diag(mats, R=None):
    R = mats[0].R if mats else R
    src = FreeModule(R, [a for M in mats for a in M.src.shifts])
    tgt = FreeModule(R, [b for M in mats for b in M.tgt.shifts])
    out = RMatrix(src, tgt)
    r = c = 0
    for M in mats:
        out.E[r : r + M.tgt.rank, c : c + M.src.rank] = M.E
        r += M.tgt.rank
        c += M.src.rank
    return out


def block(rows, src_parts, tgt_parts):
    """Assemble a block matrix; ``rows[i][j]`` is an RMatrix or ``None`` for zero."""
    R = src_parts[0].R if src_parts else tgt_parts[0].R
    src = FreeModule(R, [a for F in src_parts for a in F.shifts])
    tgt = FreeModule(R, [b for F in tgt_parts for b in F.shifts])
    out = RMatrix(src, tgt)
    r = 0
    for i, G in enumerate(tgt_parts):
        c = 0
        for j, F in enumerate(src_parts):
            M = rows[i][j]
            if M is not None:
                if M.src != F or M.tgt != G:
                    raise ValueError(f"block ({i},{j}) has the wrong shifts")
                out.E[r : r + G.rank, c : c + F.rank] = M.E
            c += F.rank
        r += G.rank
    return out


def kron_left(F, B):
    """``I_F (x) B``: generator order is (generator of F, generator of B)."""
    R = B.R
    n = F.rank
    I = np.eye(n, dtype=np.int64)
    E = np.einsum("ij,tsk->itjsk", I, B.E).reshape(n * B.tgt.rank, n * B.src.rank, R.N)
    if R.field.dtype == object:
        E = R.field.array(E)
    src = F.tensor(B.src)
    tgt = F.tensor(B.tgt)
    return RMatrix(src, tgt, E)


def kron_right(A, G):
    """``A (x) I_G``: generator order is (generator of A's side, generator of G)."""
    R = A.R
    m = G.rank
    I = np.eye(m, dtype=np.int64)
    E = np.einsum("ijk,mn->imjnk", A.E, I).reshape(A.tgt.rank * m, A.src.rank * m, R.N)
    if R.field.dtype == object:
        E = R.field.array(E)
    return RMatrix(A.src.tensor(G), A.tgt.tensor(G), E)


# ---------------------------------------------------------------------------
# modules


class Module:
    """``coker(rel: F1 -> F0)`` with cached degreewise quotient data."""

    def __init__(self, gens, rel=None, name=None):
        self.R = gens.R
        self.field = self.R.field
        self.gens = gens
        self._rel = rel if rel is not None else RMatrix(FreeModule(self.R, []), gens)
        if self._rel.tgt != gens:
            raise ValueError("relation matrix must land in the generators")
        self.name = name
        self._red = {}
        self._resolution = None

    def __repr__(self):
        return self.name or f"Module(gens={list(self.gens.shifts)}, rels={self.rel.src.rank})"

    @property
    def rel(self):
        return self._rel

    @cached_property
    def is_free(self):
        return self.rel.is_zero()

    def support(self):
        """``(lo, hi)`` bounding the nonzero slices; ``hi`` is None when unbounded."""
        if not self.gens.shifts:
            return (0, -1)
        lo = min(self.gens.shifts)
        if self.R.artinian:
            return (lo, max(self.gens.shifts) + self.R.top)
        return (lo, None)

    def _reduce(self, d):
        red = self._red.get(d)
        if red is None:
            K = self.field
            n = self.gens.dim(d)
            if self.is_free or n == 0:
                Q = None
                keep = np.arange(n, dtype=np.int64)
            else:
                img = self.rel.slice(d)
                Rr, piv = K.rref(img.T.copy()) if img.shape[1] else (K.zeros((0, n)), [])
                pivset = set(piv)
                keep = np.array([c for c in range(n) if c not in pivset], dtype=np.int64)
                if piv:
                    Q = K.zeros((len(keep), n))
                    Q[np.arange(len(keep)), keep] = 1
                    Q[:, piv] = K.reduce(-Rr[: len(piv)][:, keep]).T
                else:
                    Q = None
            red = (Q, keep, n)
            self._red[d] = red
        return red

    def dim(self, d):
        return len(self._reduce(d)[1])

    def hilbert(self, lo, hi):
        return [self.dim(d) for d in range(lo, hi + 1)]

    def proj(self, d):
        """Matrix ``F0_d -> M_d``."""
        Q, keep, n = self._reduce(d)
        if Q is None:
            Q = self.field.zeros((len(keep), n))
            Q[np.arange(len(keep)), keep] = 1
        return Q

    def project(self, d, X):
        Q, keep, n = self._reduce(d)
        if Q is None:
            return X[keep]
        return self.field.matmul(Q, X)

    def lift_index(self, d):
        return self._reduce(d)[1]

    def lift(self, d, Y):
        Q, keep, n = self._reduce(d)
        out = self.field.zeros((n,) + Y.shape[1:])
        out[keep] = Y
        return out

    def twist(self, s):
        return DirectSum([(self, s)])

    def resolution(self, length):
        from .resolutions import minimal_free_resolution

        return minimal_free_resolution(self, length)


class DirectSum(Module):
    """``(+)_k N_k(s_k)`` with slice data taken from the summands."""

    def __init__(self, summands, name=None, R=None):
        self.summands = list(summands)
        R = self.summands[0][0].R if self.summands else R
        shifts = [a - s for N, s in self.summands for a in N.gens.shifts]
        self._gen_off = np.cumsum([0] + [N.gens.rank for N, _ in self.summands]).tolist()
        self._rel_cache = None
        super().__init__(FreeModule(R, shifts), RMatrix(FreeModule(R, []), FreeModule(R, shifts)), name)
        self._rel = None

    @property
    def rel(self):
        if self._rel is None:
            if self.summands:
                self._rel = block_diag([N.rel.twisted(s) for N, s in self.summands])
                # the block-diagonal target must coincide with our generators object
                self._rel = RMatrix(self._rel.src, self.gens, self._rel.E)
            else:
                self._rel = RMatrix(FreeModule(self.R, []), self.gens)
        return self._rel

    @cached_property
    def is_free(self):
        return all(N.is_free for N, _ in self.summands)

    def _groups(self, d):
        """Per distinct summand: its slice row offsets within ``F0_d`` and within ``M_d``."""
        cache = self._red.get(("groups", d))
        if cache is not None:
            return cache
        groups = {}
        f0 = m0 = 0
        for N, s in self.summands:
            n = N.gens.dim(d + s)
            m = N.dim(d + s)
            key = (id(N), s)
            if key not in groups:
                groups[key] = (N, s, [], [])
            groups[key][2].append(f0)
            groups[key][3].append(m0)
            f0 += n
            m0 += m
        out = (list(groups.values()), f0, m0)
        self._red[("groups", d)] = out
        return out

    def _reduce(self, d):
        red = self._red.get(d)
        if red is None:
            groups, n, m = self._groups(d)
            keep = np.zeros(m, dtype=np.int64)
            for N, s, f_offs, m_offs in groups:
                k = N.lift_index(d + s)
                for fo, mo in zip(f_offs, m_offs):
                    keep[mo : mo + len(k)] = fo + k
            red = (None, keep, n)
            self._red[d] = red
        return red

    def proj(self, d):
        K = self.field
        groups, n, m = self._groups(d)
        Q = K.zeros((m, n))
        for N, s, f_offs, m_offs in groups:
            q = N.proj(d + s)
            for fo, mo in zip(f_offs, m_offs):
                Q[mo : mo + q.shape[0], fo : fo + q.shape[1]] = q
        return Q

    def project(self, d, X):
        K = self.field
        groups, n, m = self._groups(d)
        out = K.zeros((m,) + X.shape[1:])
        for N, s, f_offs, m_offs in groups:
            q_red = N._reduce(d + s)
            q, keep, nn = q_red
            mm = len(keep)
            if nn == 0 or mm == 0:
                continue
            fo = np.array(f_offs)
            rows = (fo[:, None] + np.arange(nn)).reshape(-1)
            Xs = X[rows].reshape((len(f_offs), nn) + X.shape[1:])
            if q is None:
                Ys = Xs[:, keep]
            else:
                Ys = K.matmul(q, Xs)
            mo = np.array(m_offs)
            orow = (mo[:, None] + np.arange(mm)).reshape(-1)
            out[orow] = Ys.reshape((len(m_offs) * mm,) + X.shape[1:])
        return out


def free_module(R, shifts, name=None):
    return Module(FreeModule(R, shifts), None, name)


def direct_sum(modules, R=None):
    return DirectSum([(M, 0) for M in modules], R=R)


def residue_field_module(R):
    F0 = FreeModule(R, [0])
    F1 = FreeModule(R, list(R.degrees))
    rel = RMatrix(F1, F0)
    for v in range(R.nvars):
        x = R.variable(v)
        rel.E[0, v, R.comp(x.degree)] = x.vector
    return Module(F0, rel, name="k")


def presented_module(R, gen_shifts, columns, name=None):
    """Module from generator degrees and relation columns of polynomials."""
    F0 = FreeModule(R, gen_shifts)
    cols = []
    src_shifts = []
    for c, col in enumerate(columns):
        if len(col) != F0.rank:
            raise ValueError(f"relation {c} has {len(col)} entries, expected {F0.rank}")
        deg = None
        parsed = []
        for i, p in enumerate(col):
            poly = parse_polynomial(p, R.varnames) if isinstance(p, str) else p
            poly = {m: v for m, v in poly.items() if R.field.scalar(v) != 0}
            parsed.append(poly)
            if poly:
                el_deg = sum(e * w for e, w in zip(next(iter(poly)), R.degrees))
                if deg is None:
                    deg = el_deg + F0.shifts[i]
                elif deg != el_deg + F0.shifts[i]:
                    raise ValueError(f"relation {c} is not homogeneous")
        if deg is None:
            continue
        if deg > R.dmax and not R.artinian:
            raise ValueError(f"relation {c} has degree {deg} beyond the truncation degree")
        src_shifts.append(deg)
        cols.append(parsed)
    rows = [[cols[c][i] for c in range(len(cols))] for i in range(F0.rank)]
    rel = RMatrix.from_polynomials(R, src_shifts, gen_shifts, rows) if cols else None
    if rel is not None:
        rel = RMatrix(rel.src, F0, rel.E)
    return Module(F0, rel, name)


# ---------------------------------------------------------------------------
# generators and kernels


class Generators:
    """Outcome of a greedy generator selection."""

    def __init__(self, matrix, degrees, scanned, status, last_new):
        self.matrix = matrix  # RMatrix F(degrees) -> ambient.gens
        self.degrees = degrees
        self.scanned = scanned  # (lo, hi) inclusive
        self.status = status
        self.last_new = last_new

    def __len__(self):
        return len(self.degrees)


def select_generators(ambient, degrees, subspace, certified=True):
    """Greedy homogeneous generators of a graded submodule of ``ambient``.

    ``subspace(d)`` returns columns spanning the submodule in ``ambient``'s
    degree-``d`` coordinates.  Degrees are scanned in increasing order and
    new generators are the pivot columns that the already chosen generators
    do not reach.
    """
    R = ambient.R
    K = R.field
    F0 = ambient.gens
    chosen = []
    cols = []
    mat = RMatrix(FreeModule(R, []), F0)
    degrees = list(degrees)
    last_new = None
    for d in degrees:
        S = subspace(d)
        if S.shape[1] == 0 or S.shape[0] == 0:
            continue
        G = ambient.project(d, mat.slice(d)) if chosen else K.zeros((S.shape[0], 0))
        _, piv = K.rref(np.hstack([G, S]))
        new = [p - G.shape[1] for p in piv if p >= G.shape[1]]
        if not new:
            continue
        for p in new:
            cols.append((d, ambient.lift(d, S[:, p])))
            chosen.append(d)
        last_new = d
        mat = RMatrix.from_columns(FreeModule(R, chosen), F0, cols)
    if certified:
        status = "certified"
    elif last_new is not None and degrees and last_new >= degrees[-1] - 1:
        status = "boundary"
    else:
        status = "heuristic"
    scanned = (degrees[0], degrees[-1]) if degrees else (0, -1)
    return Generators(mat, chosen, scanned, status, last_new)


def scan_range(F, others=()):
    """Degrees that can carry generators of a submodule of ``F`` (with certification flag)."""
    R = F.R
    if not F.shifts:
        return [], True
    lo = min(F.shifts)
    if R.artinian:
        return list(range(lo, max(F.shifts) + R.top + 1)), True
    hi = R.dmax + min([lo] + [min(G.shifts) for G in others if G.shifts])
    return list(range(lo, hi + 1)), False


def minimal_generators(M):
    """Minimal homogeneous generators of ``M`` as ``(degree, F0 slice vector)`` pairs.

    Generators of a presented module sit in the degrees of ``F0``, so the
    scan is always exact.
    """
    K = M.field
    if not M.gens.shifts:
        return Generators(RMatrix(FreeModule(M.R, []), M.gens), [], (0, -1), "certified", None)
    degs = sorted(set(M.gens.shifts))
    gens = select_generators(M, range(degs[0], degs[-1] + 1), lambda d: K.eye(M.dim(d)))
    return gens


def submodule_kernel(phi, target, scan=None):
    """Minimal generators of ``ker(target.project o phi)`` inside the free module ``phi.src``."""
    K = phi.R.field
    F = phi.src
    degrees, certified = scan if scan is not None else scan_range(F, [target.gens])

    def kernel(d):
        return K.kernel_basis(target.project(d, phi.slice(d)))

    ambient = Module(F)
    return select_generators(ambient, degrees, kernel, certified)


# ---------------------------------------------------------------------------
# Hom and tensor


class HomModule(Module):
    """``Hom_R(M, N)`` presented by generators embedded in ``(+)_j N(a_j)``.

    ``maps[l]`` is generator ``l`` as a homogeneous matrix ``F0(M)(e_l) -> F0(N)``
    with ``F0(M)(e_l)`` shifted so the entries have the right degrees.
    """

    def __init__(self, M, N, gens, rel, embedding, H0, status):
        super().__init__(gens, rel, name=f"Hom({M!r},{N!r})")
        self.source = M
        self.target = N
        self.embedding = embedding
        self.H0 = H0
        self.status = status

    @cached_property
    def maps(self):
        M, N = self.source, self.target
        nM, nN = M.gens.rank, N.gens.rank
        out = []
        for l, e in enumerate(self.gens.shifts):
            src = FreeModule(self.R, [a + e for a in M.gens.shifts])
            E = self.embedding.E[:, l, :].reshape(nM, nN, self.R.N).transpose(1, 0, 2).copy()
            out.append(RMatrix(src, N.gens, E))
        return out


class _HomData:
    def __init__(self, M, N):
        self.M, self.N = M, N
        self.H0 = DirectSum([(N, a) for a in M.gens.shifts], R=M.R)
        self.H1 = DirectSum([(N, b) for b in M.rel.src.shifts], R=M.R)
        self.phi = kron_right(M.rel.transpose(), N.gens)
        self.phi = RMatrix(self.H0.gens, self.H1.gens, self.phi.E)

    def kernel(self, d):
        K = self.M.field
        n = self.H0.dim(d)
        if self.H1.gens.rank == 0 or n == 0:
            return K.eye(n)
        A = self.H1.project(d, self.phi.slice(d)[:, self.H0.lift_index(d)])
        return K.kernel_basis(A)

    def degree_range(self):
        M, N = self.M, self.N
        if not M.gens.shifts or not N.gens.shifts:
            return [], True
        lo = min(N.gens.shifts) - max(M.gens.shifts)
        if M.R.artinian:
            hi = max(N.gens.shifts) + M.R.top - min(M.gens.shifts)
            return list(range(lo, hi + 1)), True
        # the relation side H1 must stay inside the window as well
        top = max(list(M.gens.shifts) + list(M.rel.src.shifts))
        hi = M.R.dmax + min(N.gens.shifts) - top
        return list(range(lo, hi + 1)), False


def hom_degree(M, N, d):
    """Basis of ``Hom(M,N)_d`` as columns of generator-image tuples in ``(+)_j N_{a_j+d}``."""
    return _HomData(M, N).kernel(d)


def hom_module(M, N):
    data = _HomData(M, N)
    degrees, certified = data.degree_range()
    gens = select_generators(data.H0, degrees, data.kernel, certified)
    G = gens.matrix
    F = FreeModule(M.R, gens.degrees)
    rels = submodule_kernel(G, data.H0, _kernel_scan(F, certified, M.R, [data.H0.gens]))
    rel = RMatrix(rels.matrix.src, F, rels.matrix.E)
    status = "certified" if certified else gens.status
    return HomModule(M, N, F, rel, G, data.H0, status)


def _kernel_scan(F, certified, R, others):
    degrees, cert = scan_range(F, others)
    return degrees, cert and certified


def tensor_module(M, N):
    F0 = M.gens.tensor(N.gens)
    parts = []
    if M.rel.src.rank:
        parts.append(kron_right(M.rel, N.gens))
    if N.rel.src.rank:
        parts.append(kron_left(M.gens, N.rel))
    rel = None
    if parts:
        rel = hstack(parts)
        rel = RMatrix(rel.src, F0, rel.E)
    return Module(F0, rel, name=f"{M!r}(x){N!r}")


# ---------------------------------------------------------------------------
# modules from finite-dimensional data


def module_from_action(R, dims, action, name=None):
    """Present a finite-length module given degreewise dimensions and the R-action.

    ``dims`` maps degree -> dimension; ``action(s, d)`` returns a tensor of shape
    ``(dim R_s, dims[d], dims[d+s])`` describing multiplication by the basis of ``R_s``.
    Returns the module together with the surjection matrices ``eps_d: F0_d -> V_d``.
    """
    K = R.field
    degs = sorted(d for d, n in dims.items() if n)
    chosen = []

    def images(d):
        cols = []
        for e, v in chosen:
            if d - e < 0:
                continue
            A = action(d - e, e)
            if A.shape[0] == 0:
                continue
            cols.append(K.tensordot(A, v, axes=([1], [0])).T)
        n = dims.get(d, 0)
        return np.hstack(cols) if cols else K.zeros((n, 0))

    for d in degs:
        G = images(d)
        _, piv = K.rref(np.hstack([G, K.eye(dims[d])]))
        for p in piv:
            if p >= G.shape[1]:
                chosen.append((d, K.eye(dims[d])[:, p - G.shape[1]].copy()))
    F = FreeModule(R, [e for e, _ in chosen])

    def eps(d):
        n = dims.get(d, 0)
        if not chosen:
            return K.zeros((n, 0))
        return images(d) if n else K.zeros((0, F.dim(d)))

    if chosen:
        degrees, certified = scan_range(F)
        kernel = select_generators(Module(F), degrees, lambda d: K.kernel_basis(eps(d)), certified)
        rel = RMatrix(kernel.matrix.src, F, kernel.matrix.E)
    else:
        rel = None
    return Module(F, rel, name), eps
