"""Minimal graded free resolutions, Betti tables, Ext and Bass numbers."""
from collections import Counter
from dataclasses import dataclass, field

from .complexes import Complex, hom_complex, module_complex
from .modules import FreeModule, Module, RMatrix, minimal_generators, residue_field_module, scan_range, submodule_kernel
from .ring import WindowError
from .series import LaurentPolyZ


@dataclass
class BettiTable:
    """``entries[i]`` counts the step-``i`` generators by internal degree."""

    entries: list

    @classmethod
    def from_shifts(cls, shifts):
        return cls([dict(sorted(Counter(s).items())) for s in shifts])

    def betti(self, i):
        return sum(self.entries[i].values()) if i < len(self.entries) else 0

    def normalized(self):
        """Table with internal degrees moved so the lowest entry sits at 0."""
        degs = [d for row in self.entries for d in row]
        if not degs:
            return self
        m = min(degs)
        return BettiTable([{d - m: c for d, c in row.items()} for row in self.entries])

    def __eq__(self, other):
        return isinstance(other, BettiTable) and _strip(self.entries) == _strip(other.entries)


def _strip(entries):
    out = list(entries)
    while out and not out[-1]:
        out.pop()
    return out


class Resolution:
    """A minimal free resolution built step by step and extended on demand.

    ``diffs[i]`` maps ``F_i -> F_{i-1}`` for ``i >= 1``; ``augmentation`` maps
    ``F_0`` onto the generators of the target module.  ``status[i]`` is
    ``certified`` (provably complete at step ``i``), ``heuristic`` (no new
    generators near the top of the scan) or ``boundary``.
    """

    def __init__(self, M):
        self.module = M
        self.R = M.R
        gens = minimal_generators(M)
        self.augmentation = gens.matrix
        self.free = [FreeModule(self.R, gens.degrees)]
        self.diffs = [None]
        self.status = ["certified"]
        self.finished = gens.matrix.src.rank == 0
        self._complex = None

    @property
    def computed(self):
        return len(self.free) - 1

    def extend(self, n):
        while self.computed < n and not self.finished:
            i = self.computed + 1
            Fi1 = self.free[-1]
            if i == 1:
                phi, target = RMatrix(Fi1, self.module.gens, self.augmentation.E), self.module
            else:
                phi, target = self.diffs[-1], Module(self.free[-2])
            try:
                scan = scan_range(Fi1, [target.gens])
                ker = submodule_kernel(phi, target, scan)
            except WindowError as err:
                self.status.append(f"window:{err.degree}")
                self.finished = True
                break
            F = FreeModule(self.R, ker.degrees)
            self.free.append(F)
            self.diffs.append(RMatrix(F, Fi1, ker.matrix.E))
            self.status.append(ker.status)
            self._complex = None
            if F.rank == 0:
                self.finished = True
        return self

    @property
    def length(self):
        """Index of the last nonzero term computed."""
        n = max((i for i, F in enumerate(self.free) if F.rank), default=-1)
        return n

    @property
    def betti(self):
        return [F.rank for F in self.free]

    def betti_number(self, i):
        self.extend(i)
        return self.free[i].rank if i < len(self.free) else 0

    def shifts(self):
        return [F.shifts for F in self.free]

    def table(self):
        return BettiTable.from_shifts(self.shifts())

    def is_minimal(self):
        return all(D.is_minimal() for D in self.diffs[1:])

    def reliable(self, i):
        """Is ``beta_i`` known exactly (not merely heuristically)?"""
        if i >= len(self.status):
            return self.finished and all(s == "certified" for s in self.status)
        return all(s == "certified" for s in self.status[: i + 1])

    def complex(self, n=None):
        """``F_0 <- ... <- F_n`` as a :class:`Complex`."""
        n = self.computed if n is None else n
        self.extend(n)
        top = min(n, self.computed)
        terms = {i: Module(self.free[i]) for i in range(top + 1)}
        diffs = {i: self.diffs[i] for i in range(1, top + 1)}
        return Complex(self.R, terms, diffs, check=False)

    def flags(self, n):
        out = set()
        for i, s in enumerate(self.status[: n + 1]):
            if s != "certified":
                out.add(f"step{i}:{s}")
        if self.computed < n and not self.finished:
            out.add("incomplete")
        if self.R.beyond_window:
            out.add("ideal-beyond-window")
        return out


def minimal_free_resolution(M, length):
    """Resolution of ``M`` up to ``F_length``; cached on the module and extended in place."""
    res = M._resolution
    if res is None:
        res = Resolution(M)
        M._resolution = res
    return res.extend(length)


def poincare_series(M, n):
    res = minimal_free_resolution(M, n)
    b = [res.free[i].rank if i < len(res.free) else 0 for i in range(n + 1)]
    flags = res.flags(n)
    exact = res.finished and not flags and all(s == "certified" for s in res.status)
    return LaurentPolyZ(0, tuple(b), None if exact else n, frozenset(flags))


# ---------------------------------------------------------------------------
# Ext


@dataclass
class ExtTable:
    """``dims[i][d] = dim Ext^i(M,N)_d`` plus per-``i`` warning flags."""

    dims: dict
    flags: dict = field(default_factory=dict)
    windows: dict = field(default_factory=dict)

    def total(self, i):
        return sum(self.dims[i].values())

    def saturated(self, i):
        return bool(self.flags.get(i))

    def saturation_degree(self, i):
        for f in sorted(self.flags.get(i, ())):
            if f.startswith("window-saturation:"):
                return int(f.split(":")[1])
        return None


def ext_window(F_i, N, upper=None):
    """Internal degrees where ``Hom(F_i, N)`` can be nonzero; ``exact`` when bounded."""
    lo_n, hi_n = N.support()
    if not F_i.shifts or not N.gens.shifts:
        return range(0), True
    lo = lo_n - max(F_i.shifts)
    if hi_n is not None:
        return range(lo, hi_n - min(F_i.shifts) + 1), True
    return range(lo, upper + 1), False


def ext_dims(M, N, imax, upper=None, cap=None):
    """``dim Ext^i(M, N)_d`` for ``0 <= i <= imax`` via ``H_{-i} Hom(F, N)``.

    For artinian rings every slice is covered exactly.  Otherwise degrees run
    from the exact lower bound up to ``upper`` (default ``imax + 2`` plus the top
    generator degree of ``N``); a nonzero slice at ``upper`` or a window overflow
    flags that ``i`` as saturated.  ``cap`` cuts any window, artinian or not,
    and a cut window is always flagged.
    """
    res = minimal_free_resolution(M, imax + 1)
    F = res.complex(imax + 1)
    X = hom_complex(F, module_complex(N))
    if upper is None and N.gens.shifts:
        upper = imax + 2 + max(N.gens.shifts)
    dims, flags, windows = {}, {}, {}
    for i in range(imax + 1):
        fl = set(res.flags(i + 1))
        Fi = res.free[i] if i < len(res.free) else FreeModule(M.R, [])
        window, exact = ext_window(Fi, N, upper)
        if cap is not None and window and window[-1] > cap:
            fl.add(f"window-saturation:{cap}")
            window, exact = range(window[0], max(cap, window[0] - 1) + 1), False
        row = {}
        for d in window:
            try:
                h = X.homology_dims(-i, [d])[d]
            except WindowError as err:
                fl.add(f"window-saturation:{err.degree}")
                break
            if h:
                row[d] = h
        if not exact and window and row.get(window[-1]):
            fl.add(f"window-saturation:{window[-1]}")
        dims[i] = row
        flags[i] = fl
        windows[i] = (window[0], window[-1]) if window else None
    return ExtTable(dims, flags, windows)


def bass_numbers(R, n, upper=None, cap=None):
    """``mu^i = dim Ext^i(k, R)`` for ``i <= n``."""
    from .modules import free_module

    k = _residue(R)
    RR = free_module(R, [0], name="R")
    return ext_dims(k, RR, n, upper, cap)


def bass_series(R, n, upper=None, cap=None):
    """Bass series to ``t^n``; exact once a certified zero follows the depth.

    Bass numbers of a finitely generated module are nonzero at every index
    between its depth and its injective dimension, so ``mu^j = 0`` for some
    ``j`` past the first nonzero index forces ``mu^i = 0`` for all ``i >= j``.
    """
    table = bass_numbers(R, n, upper, cap)
    mus = tuple(table.total(i) for i in range(n + 1))
    flags = set().union(*table.flags.values()) if table.flags else set()
    if not flags:
        nz = [i for i, m in enumerate(mus) if m]
        gap = next((j for j in range(nz[0] + 1, n + 1) if mus[j] == 0), None) if nz else None
        if gap is not None:
            return LaurentPolyZ(0, mus[:gap], None), table
    return LaurentPolyZ(0, mus, n, frozenset(flags)), table


def _residue(R):
    k = getattr(R, "_residue_module", None)
    if k is None:
        k = residue_field_module(R)
        R._residue_module = k
    return k


def tor_dims(M, n, degrees=None):
    """``dim Tor_i(k, M)`` from ``H_i(k (x) F)``, the second route to Betti numbers."""
    from .complexes import tensor_complex

    res = minimal_free_resolution(M, n + 1)
    F = res.complex(n + 1)
    Y = tensor_complex(module_complex(_residue(M.R)), F)
    out = []
    for i in range(n + 1):
        degs = degrees if degrees is not None else sorted(set(res.free[i].shifts)) if i < len(res.free) else []
        out.append(sum(Y.homology_dims(i, degs).values()))
    return out


# ---------------------------------------------------------------------------


@dataclass
class GapVerdict:
    status: str  # "free" | "no-gaps" | "gap"
    betti: list
    gap_index: int = None


def betti_gap_check(C, n):
    """A semidualizing module is free of rank one or has ``beta_j >= 1`` for every ``j``."""
    res = minimal_free_resolution(C, n)
    b = [res.free[i].rank if i < len(res.free) else 0 for i in range(n + 1)]
    if b[0] == 1 and all(x == 0 for x in b[1:]):
        return GapVerdict("free", b)
    for j, x in enumerate(b):
        if x == 0:
            return GapVerdict("gap", b, j)
    return GapVerdict("no-gaps", b)
