"""Dualizing modules of artinian rings, homothety/biduality checks and chains.

Verdicts are three-valued.  ``verified`` always means "to the stated cutoff
and window": Ext vanishing for every ``i`` cannot be read off finite data.
"""
from dataclasses import dataclass, field

import numpy as np

from .modules import (
    FreeModule,
    RMatrix,
    _HomData,
    free_module,
    hom_module,
    kron_left,
    minimal_generators,
    module_from_action,
    tensor_module,
)
from .resolutions import ext_dims, minimal_free_resolution, poincare_series
from .ring import WindowError

VERIFIED, REFUTED, INCONCLUSIVE = "verified", "refuted", "inconclusive"


def _require_artinian(R, what):
    if not R.artinian:
        note = " (it only looks artinian inside the window)" if R.artinian_in_window else ""
        raise ValueError(f"{what} needs a certified artinian ring{note}")


def matlis_dual(R):
    """``D = Hom_k(R, k)`` with ``D_d = (R_{t-d})^*``, so ``D`` lives in degrees ``0..t``."""
    _require_artinian(R, "the dualizing module")
    t = R.top
    dims = {d: R.dim(t - d) for d in range(t + 1)}

    def action(s, d):
        b = t - d - s
        if b < 0 or s < 0:
            return R.field.zeros((R.dim(s), dims.get(d, 0), 0 if b < 0 else R.dim(b)))
        return R.mult(s, b).transpose(0, 2, 1)

    D, _ = module_from_action(R, dims, action, name="D")
    return D


def cm_type(R):
    _require_artinian(R, "the Cohen-Macaulay type")
    return len(R.socle_basis())


def beta0(M):
    return len(minimal_generators(M))


def _degrees(R, *ranges):
    lo = min(r[0] for r in ranges if len(r))
    hi = max(r[-1] for r in ranges if len(r))
    return range(lo, hi + 1)


def _support_range(M):
    lo, hi = M.support()
    if hi is None:
        raise ValueError("unbounded module; pass an explicit window")
    return range(lo, hi + 1)


# ---------------------------------------------------------------------------
# homothety and biduality


@dataclass
class IsoCheck:
    iso: bool
    degree: int = None
    kind: str = None  # "kernel" | "cokernel"
    vector: object = None
    window: tuple = None


def _bijective(A, n_src, n_tgt, K, d, window):
    """Is the slice map ``A`` (``n_tgt x n_src``) a bijection?  Witness otherwise."""
    r = K.rank(A) if A.size else 0
    if r < n_src:
        ker = K.kernel_basis(A) if A.shape[0] else K.eye(n_src)
        return IsoCheck(False, d, "kernel", ker[:, 0], window)
    if r < n_tgt:
        return IsoCheck(False, d, "cokernel", None, window)
    return None


def check_homothety(C, window=None):
    """Is ``R -> Hom(C, C)``, ``r -> (c -> rc)``, bijective in every degree of the window?"""
    R = C.R
    K = R.field
    data = _HomData(C, C)
    if window is None:
        _require_artinian(R, "an automatic window")
        hom_degs, _ = data.degree_range()
        window = _degrees(R, range(0, R.top + 1), hom_degs)
    win = (window[0], window[-1]) if len(window) else None
    for d in window:
        h = data.kernel(d)
        rd = R.dim(d)
        rows = []
        for j, a in enumerate(C.gens.shifts):
            F = C.gens
            off = F.offsets(a + d)
            n = F.dim(a + d)
            E = K.zeros((n, rd))
            if rd:
                E[off[j] : off[j] + rd] = K.eye(rd)
            rows.append(C.project(a + d, E))
        chi = np.vstack(rows) if rows else K.zeros((0, rd))
        bad = _bijective(chi, rd, h.shape[1], K, d, win)
        if bad is not None:
            return bad
    return IsoCheck(True, window=win)


def biduality_check(G, C, H=None, window=None):
    """Is ``delta: G -> Hom(Hom(G, C), C)``, ``x -> (phi -> phi(x))``, bijective?"""
    R = G.R
    K = R.field
    H = hom_module(G, C) if H is None else H
    data = _HomData(H, C)
    if window is None:
        _require_artinian(R, "an automatic window")
        hom_degs, _ = data.degree_range()
        window = _degrees(R, _support_range(G), hom_degs)
    win = (window[0], window[-1]) if len(window) else None
    maps = H.maps
    for d in window:
        n = G.dim(d)
        target_dim = data.kernel(d).shape[1]
        keep = G.lift_index(d)
        rows = []
        for l, e in enumerate(H.gens.shifts):
            rows.append(C.project(d + e, maps[l].slice(d + e)[:, keep]))
        delta = np.vstack(rows) if rows else K.zeros((0, n))
        bad = _bijective(delta, n, target_dim, K, d, win)
        if bad is not None:
            return bad
    return IsoCheck(True, window=win)


# ---------------------------------------------------------------------------
# verdicts


def _ext_verdict(table, cutoff, label):
    """``(status, witness)`` for ``Ext^i = 0`` on ``1 <= i <= cutoff``."""
    saturated = None
    for i in range(1, cutoff + 1):
        sat = table.saturation_degree(i)
        if table.total(i) and sat is None:
            return REFUTED, {"reason": f"{label}-nonvanishing", "i": i}
        if sat is not None and saturated is None:
            saturated = {"reason": "window-saturation", "i": i, "degree": sat}
    if saturated:
        return INCONCLUSIVE, saturated
    return VERIFIED, None


@dataclass
class SemidualizingVerdict:
    candidate: str
    cutoff: int
    status: str
    homothety: IsoCheck
    ext: object
    beta0: int
    witness: dict = None
    window: tuple = None
    beta0_consistent: bool = True
    flags: set = field(default_factory=set)


def check_semidualizing(C, cutoff, window=None, upper=None):
    name = repr(C)
    homo = check_homothety(C, window)
    b0 = beta0(C)
    if not homo.iso:
        return SemidualizingVerdict(
            name, cutoff, REFUTED, homo, None, b0,
            {"reason": "homothety", "degree": homo.degree, "kind": homo.kind}, homo.window,
        )
    table = ext_dims(C, C, cutoff, upper)
    status, witness = _ext_verdict(table, cutoff, "ext")
    flags = set().union(*[table.flags[i] for i in range(cutoff + 1)])
    free = minimal_free_resolution(C, 1).free
    is_free_rank1 = b0 == 1 and len(free) > 1 and free[1].rank == 0
    consistent = True if status != VERIFIED else (is_free_rank1 or b0 >= 2)
    return SemidualizingVerdict(name, cutoff, status, homo, table, b0, witness, homo.window, consistent, flags)


@dataclass
class ReflexivityVerdict:
    g: str
    c: str
    cutoff: int
    status: str
    biduality: IsoCheck
    ext_gc: object = None
    ext_hc: object = None
    witness: dict = None
    hom: object = None


def check_totally_reflexive(G, C, cutoff, window=None, upper=None):
    """Biduality plus ``Ext^i(G,C) = 0 = Ext^i(Hom(G,C),C)`` for ``1 <= i <= cutoff``.

    All three conditions are evaluated; the reported witness prefers an
    Ext(G,C) failure, then biduality, then Ext(Hom(G,C),C).
    """
    H = hom_module(G, C)
    t1 = ext_dims(G, C, cutoff, upper)
    s1, w1 = _ext_verdict(t1, cutoff, "ext-gc")
    bid = biduality_check(G, C, H, window)
    t2 = ext_dims(H, C, cutoff, upper)
    s2, w2 = _ext_verdict(t2, cutoff, "ext-hc")
    wb = None if bid.iso else {"reason": "biduality", "degree": bid.degree, "kind": bid.kind}
    refuted = [w for s, w in ((s1, w1), (REFUTED if wb else VERIFIED, wb), (s2, w2)) if s == REFUTED]
    if refuted:
        status, witness = REFUTED, refuted[0]
    elif INCONCLUSIVE in (s1, s2):
        status, witness = INCONCLUSIVE, w1 or w2
    else:
        status, witness = VERIFIED, None
    return ReflexivityVerdict(repr(G), repr(C), cutoff, status, bid, t1, t2, witness, H)


# ---------------------------------------------------------------------------
# chains


def hilbert_normalized(M):
    dims = [M.dim(d) for d in _support_range(M)]
    while dims and dims[0] == 0:
        dims.pop(0)
    while dims and dims[-1] == 0:
        dims.pop()
    return dims


def is_isomorphism(phi, src, tgt, window=None):
    """Does the homogeneous map ``phi: F0(src)(e) -> F0(tgt)`` induce ``src(-e) = tgt``?"""
    K = src.R.field
    e = phi.src.shifts[0] - src.gens.shifts[0] if src.gens.shifts else 0
    window = window if window is not None else _degrees(src.R, _support_range(src), range(min(_support_range(tgt)) - e, max(_support_range(tgt)) - e + 1))
    for d in window:
        n, m = src.dim(d), tgt.dim(d + e)
        if n != m:
            return False
        if n == 0:
            continue
        A = tgt.project(d + e, phi.slice(d + e)[:, src.lift_index(d)])
        if K.rank(A) != n:
            return False
    return True


@dataclass
class Strictness:
    strict: object  # True, False or None (inconclusive)
    reason: str


def strictness(B, C, cutoff):
    """Is ``<B> <| <C>`` strict, i.e. is ``C`` not a twist of ``B``?"""
    if hilbert_normalized(B) != hilbert_normalized(C):
        return Strictness(True, "hilbert")
    tb = minimal_free_resolution(B, cutoff).table().normalized()
    tc = minimal_free_resolution(C, cutoff).table().normalized()
    if tb.entries[: cutoff + 1] != tc.entries[: cutoff + 1]:
        return Strictness(True, "betti")
    H = hom_module(C, B)
    b0 = len(H.gens.shifts)
    if b0 == 0:
        return Strictness(True, "hom-zero")
    if beta0(H) >= 2:
        return Strictness(True, "hom-beta0")
    if is_isomorphism(H.maps[0], C, B):
        return Strictness(False, "isomorphic")
    return Strictness(None, "undecided")


@dataclass
class ChainReport:
    chain: list
    cutoff: int
    status: str
    sdc: list
    links: list
    strict: list
    factorization: object = None


def check_chain(chain, cutoff, factorization=False, window=None):
    """``<C^0> <| <C^1> <| ... `` means ``C^i`` is totally ``C^{i-1}``-reflexive."""
    sdc = [check_semidualizing(C, cutoff, window) for C in chain]
    links = [check_totally_reflexive(chain[i], chain[i - 1], cutoff, window) for i in range(1, len(chain))]
    strict = [strictness(chain[i - 1], chain[i], cutoff) for i in range(1, len(chain))]
    statuses = [v.status for v in sdc] + [v.status for v in links]
    if REFUTED in statuses:
        status = REFUTED
    elif INCONCLUSIVE in statuses:
        status = INCONCLUSIVE
    else:
        status = VERIFIED
    fact = factorization_check(chain, cutoff) if factorization and status == VERIFIED else None
    if fact is not None and fact.status != VERIFIED:
        status = fact.status
    return ChainReport([repr(C) for C in chain], cutoff, status, sdc, links, strict, fact)


# ---------------------------------------------------------------------------
# tensor factorization


def evaluation_map(H, N):
    """``Hom(N, B) (x) N -> B`` on generators: ``phi_l (x) e_s -> phi_l(e_s)``."""
    maps = H.maps
    B = H.target
    src = H.gens.tensor(N.gens)
    if not maps:
        return RMatrix(src, B.gens)
    E = np.concatenate([phi.E for phi in maps], axis=1)
    return RMatrix(src, B.gens, E)


@dataclass
class FactorizationVerdict:
    status: str
    xi_iso: bool
    well_defined: bool
    poincare: tuple  # (P_{C^0}, product) truncated at the cutoff
    poincare_ok: bool
    failed_degree: int = None
    homs: list = None


def factorization_check(chain, cutoff=4, window=None):
    """``C^0 = Hom(C^1,C^0) (x) ... (x) Hom(C^d,C^{d-1}) (x) C^d`` via the evaluation map."""
    R = chain[0].R
    K = R.field
    homs = [hom_module(chain[i], chain[i - 1]) for i in range(1, len(chain))]
    T = chain[-1]
    xi = RMatrix.identity(T.gens)
    for i in range(len(chain) - 1, 0, -1):
        H = homs[i - 1]
        ev = evaluation_map(H, chain[i])
        lifted = kron_left(H.gens, xi)
        T = tensor_module(H, T)
        lifted = RMatrix(T.gens, lifted.tgt, lifted.E)
        xi = ev @ RMatrix(lifted.src, ev.src, lifted.E)
    target = chain[0]
    if window is None:
        window = _degrees(R, _support_range(target), _support_range(T))
    well = True
    iso = True
    failed = None
    for d in window:
        n = T.dim(d)
        m = target.dim(d)
        rel = T.rel
        if rel.src.rank:
            img = target.project(d, (xi @ rel).slice(d))
            if np.any(img != 0):
                well = False
        if n != m:
            iso, failed = False, d
            break
        if n and K.rank(target.project(d, xi.slice(d)[:, T.lift_index(d)])) != n:
            iso, failed = False, d
            break
    lhs = poincare_series(target, cutoff)
    rhs = poincare_series(chain[-1], cutoff)
    for H in homs:
        rhs = rhs * poincare_series(H, cutoff)
    rhs = rhs.truncate(cutoff)
    lhs = lhs.truncate(cutoff)
    p_ok = lhs.coefficients(0, cutoff) == rhs.coefficients(0, cutoff)
    status = VERIFIED if (iso and well and p_ok) else REFUTED
    return FactorizationVerdict(status, iso, well, (lhs, rhs), p_ok, failed, homs)


def beta0_identity(B, C):
    """For ``<B> <| <C> <| <B>``: ``beta0(B) = beta0(Hom(C,B)) beta0(Hom(B,C)) beta0(B)``."""
    lhs = beta0(B)
    rhs = beta0(hom_module(C, B)) * beta0(hom_module(B, C)) * lhs
    return lhs == rhs, lhs, rhs
