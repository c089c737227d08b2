"""Command-line front end: ``semidual <command> --ring FILE [options]``.

Exit status: 0 decisive success, 1 refutation, 2 inconclusive, 3 usage or
parse error.  ``SDC_THREADS`` is accepted as a thread-count hint; all work is
currently single-threaded.
"""
import argparse
import sys

from . import bounds
from .duality import (
    INCONCLUSIVE,
    REFUTED,
    VERIFIED,
    beta0,
    check_chain,
    check_semidualizing,
    check_totally_reflexive,
    cm_type,
)
from .polynomials import PolynomialSyntaxError
from .report import EXIT_INCONCLUSIVE, EXIT_OK, EXIT_REFUTED, EXIT_USAGE, Report, emit_report
from .resolutions import bass_series, minimal_free_resolution, poincare_series
from .ring import WindowError
from .ringfile import ExpressionError, ModuleResolver, RingFileError, build_ring, parse_ring_file, split_top_level
from .series import LaurentPolyZ, series_mul

_EXIT = {VERIFIED: EXIT_OK, REFUTED: EXIT_REFUTED, INCONCLUSIVE: EXIT_INCONCLUSIVE}
_BOUND_EXIT = {bounds.HOLDS: EXIT_OK, bounds.FAILS: EXIT_REFUTED, bounds.INCONCLUSIVE: EXIT_INCONCLUSIVE}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _field_label(name):
    return name.replace(" ", "")


def _witness_items(witness):
    """Status-line pairs for a witness dict: ``reason`` then ``degree`` first."""
    w = dict(witness or {})
    items = [(k, w.pop(k)) for k in ("reason", "degree") if k in w]
    return items + sorted(w.items())


def _verdict_status(rep, status, witness, cutoff):
    if status == VERIFIED:
        rep.status(status=status, cutoff=cutoff)
    else:
        rep.status(("status", status), *_witness_items(witness), ("cutoff", cutoff))
    rep.worsen(_EXIT[status])


# ---------------------------------------------------------------------------
# commands


def cmd_ring_info(args, ctx):
    R, spec = ctx.ring, ctx.spec
    rep = Report()
    rep.add(
        "ring",
        field=_field_label(spec.field),
        vars=list(spec.vars),
        degrees=list(R.degrees),
        truncate=spec.truncate,
        artinian=R.artinian,
        top=R.top if R.artinian else "none",
    )
    h = R.hilbert_coeffs(R.top if R.artinian else R.dmax)
    if R.artinian:
        h = LaurentPolyZ(h.offset, h.coeffs)
    rep.add("hilbert", series=h)
    try:
        soc = R.socle_basis()
    except WindowError:
        soc = []
    by_degree = {}
    for s in soc:
        by_degree[s.degree] = by_degree.get(s.degree, 0) + 1
    for d in sorted(by_degree):
        rep.add("socle", degree=d, dim=by_degree[d])
    if R.artinian:
        rep.add("type", value=cm_type(R))
    return rep


def _resolution_exit(res, n):
    bad = [s for s in res.status[: n + 1] if s not in ("certified", "heuristic")]
    return EXIT_INCONCLUSIVE if bad or (res.computed < n and not res.finished) else EXIT_OK


def cmd_resolve(args, ctx):
    M = ctx.module(args.module)
    res = minimal_free_resolution(M, args.length)
    rep = Report()
    top = min(args.length, res.computed)
    rep.add("resolution", module=args.module, length=args.length, finished=res.finished, minimal=res.is_minimal())
    for i in range(top + 1):
        rep.add("step", i=i, rank=res.free[i].rank, shifts=list(res.free[i].shifts), status=res.status[i].replace(":", "-"))
    rep.worsen(_resolution_exit(res, args.length))
    return rep


def cmd_betti(args, ctx):
    M = ctx.module(args.module)
    res = minimal_free_resolution(M, args.length)
    rep = Report()
    table = res.table()
    top = min(args.length, res.computed)
    last = max((i for i in range(top + 1) if res.free[i].rank), default=0)
    for i in range(last + 1 if res.finished else top + 1):
        status = res.status[i]
        rep.add("betti", i=i, b=res.free[i].rank, graded=table.entries[i],
                status=None if status == "certified" else status.replace(":", "-"))
    rep.worsen(_resolution_exit(res, args.length))
    return rep


def cmd_poincare(args, ctx):
    M = ctx.module(args.module)
    P = poincare_series(M, args.length)
    rep = Report().add("poincare", module=args.module, series=P)
    rep.worsen(_resolution_exit(minimal_free_resolution(M, args.length), args.length))
    return rep


def _bass(ctx, cutoff, window):
    """Bass series plus the index of the first saturated exponent (or None)."""
    series, table = bass_series(ctx.ring, cutoff, cap=window)
    first = next((i for i in range(cutoff + 1) if table.saturation_degree(i) is not None), None)
    return series, table, first


def _heuristic(table, cutoff):
    flags = set().union(*[table.flags[i] for i in range(cutoff + 1)])
    return any(":heuristic" in f or ":boundary" in f for f in flags)


def cmd_bass(args, ctx):
    series, table, first = _bass(ctx, args.cutoff, args.window)
    rep = Report()
    for i in range(args.cutoff + 1):
        sat = table.saturation_degree(i)
        rep.add("bass", i=i, mu=table.total(i), saturated=sat)
    rep.add("series", series=series)
    resolution = "heuristic" if _heuristic(table, args.cutoff) else None
    if first is None:
        rep.status(status=VERIFIED, cutoff=args.cutoff, resolution=resolution)
    else:
        rep.status(status=INCONCLUSIVE, reason="window-saturation", degree=table.saturation_degree(first),
                   i=first, cutoff=args.cutoff)
        rep.worsen(EXIT_INCONCLUSIVE)
    return rep


def cmd_check_sdc(args, ctx):
    C = ctx.module(args.candidate)
    v = check_semidualizing(C, args.cutoff, upper=args.window)
    rep = Report()
    rep.add("sdc", candidate=args.candidate, beta0=v.beta0, homothety="iso" if v.homothety.iso else "not-iso")
    if v.ext is not None:
        for i in range(1, args.cutoff + 1):
            rep.add("ext", i=i, dim=v.ext.total(i))
    _verdict_status(rep, v.status, v.witness, args.cutoff)
    return rep


def cmd_check_reflexive(args, ctx):
    G, C = ctx.module(args.g), ctx.module(args.c)
    v = check_totally_reflexive(G, C, args.cutoff, upper=args.window)
    rep = Report()
    rep.add("reflexive", g=args.g, c=args.c, biduality="iso" if v.biduality.iso else "not-iso",
            homgc_beta0=beta0(v.hom))
    for i in range(1, args.cutoff + 1):
        rep.add("ext", i=i, gc=v.ext_gc.total(i), hc=v.ext_hc.total(i))
    _verdict_status(rep, v.status, v.witness, args.cutoff)
    return rep


def cmd_check_chain(args, ctx):
    names = split_top_level(args.chain)
    chain = [ctx.module(n) for n in names]
    v = check_chain(chain, args.cutoff, factorization=args.factorization)
    rep = Report()
    for name, s in zip(names, v.sdc):
        rep.add("sdc", candidate=name, status=s.status)
    for i, (link, st) in enumerate(zip(v.links, v.strict), start=1):
        rep.add("link", i=i, g=names[i], c=names[i - 1], status=link.status,
                strict="unknown" if st.strict is None else st.strict, reason=st.reason)
    if v.factorization is not None:
        f = v.factorization
        rep.add("factorization", status=f.status, xi="iso" if f.xi_iso else "not-iso",
                welldefined=f.well_defined, poincare="ok" if f.poincare_ok else "mismatch")
        rep.add("poincare", series=f.poincare[0])
    witness = None
    if v.status != VERIFIED:
        bad = [s for s in v.sdc + v.links if s.status == v.status]
        witness = bad[0].witness if bad else {"reason": "factorization"}
    _verdict_status(rep, v.status, witness, args.cutoff)
    if v.status == VERIFIED:
        strict = all(s.strict for s in v.strict)
        rep.status(length=len(chain) - 1, strict=strict)
    return rep


def cmd_verify_bounds(args, ctx):
    rep = Report()
    table, first = None, None
    if args.thm == "0101p" and args.mu is not None:
        series, g = None, args.g or 0
    else:
        series, table, first = _bass(ctx, args.cutoff, args.window)
        if first is not None:
            # keep only the saturation-free prefix
            series = series.truncate(first - 1)
        rep.add("series", series=series)
        g = args.g if args.g is not None else series.offset
    if args.thm == "0101":
        r = bounds.verify_thm0101(series, g, args.d if args.d is not None else 1)
    elif args.thm == "0101p":
        mu = args.mu if args.mu is not None else series[g]
        if mu < 1:
            raise UsageError(f"type at depth {g} is {mu}; pass --g with the depth")
        r = bounds.verify_prop0101(mu, args.d if args.d is not None else 1)
    elif args.thm == "0103":
        r = bounds.verify_prop0103(series, g, args.d)
    else:
        r = bounds.verify_prop0102(series, g, args.p)
    rep.add("bound", ("thm", args.thm), ("outcome", r.outcome), ("condition", r.condition),
            *[(k, r.values[k]) for k in r.values])
    if r.conclusion is not None:
        rep.status(conclusion=r.conclusion, witness_i=r.witness_i)
    elif r.outcome == bounds.INCONCLUSIVE and first is not None:
        rep.status(status=INCONCLUSIVE, reason="window-saturation", degree=table.saturation_degree(first), i=first)
    rep.worsen(_BOUND_EXIT[r.outcome])
    return rep


def _coeffs(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"coefficients must be comma-separated integers: {text!r}") from None


def cmd_series_mul(args, ctx):
    a, b = _coeffs(args.a), _coeffs(args.b)
    ta = None if args.exact else args.a_offset + len(a) - 1
    tb = None if args.exact else args.b_offset + len(b) - 1
    p = series_mul(LaurentPolyZ(args.a_offset, tuple(a), ta), LaurentPolyZ(args.b_offset, tuple(b), tb))
    return Report().add("series", series=p)


# ---------------------------------------------------------------------------
# dispatch


class _Context:
    def __init__(self, path):
        self._path = path
        self._spec = None
        self._ring = None
        self._resolver = None

    @property
    def spec(self):
        if self._spec is None:
            if self._path is None:
                raise UsageError("this command needs --ring FILE")
            try:
                with open(self._path, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as err:
                raise UsageError(f"cannot read ring file: {err}") from None
            self._spec = parse_ring_file(text)
        return self._spec

    @property
    def ring(self):
        if self._ring is None:
            self._ring = build_ring(self.spec)
        return self._ring

    def module(self, text):
        if self._resolver is None:
            self._resolver = ModuleResolver(self.ring, self.spec)
        return self._resolver(text)


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--ring", help="ring file")
    common.add_argument("--format", choices=("human", "machine"), default="human")
    p = _Parser(prog="semidual", description="Homological invariants over graded quotient algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("ring-info", cmd_ring_info, "Hilbert function, artinian flag, socle and type")
    for name, func, length in (("resolve", cmd_resolve, 4), ("betti", cmd_betti, 6), ("poincare", cmd_poincare, 6)):
        sp = add(name, func, f"{name} of a module")
        sp.add_argument("--module", required=True)
        sp.add_argument("--length", type=int, default=length)
    sp = add("bass", cmd_bass, "Bass numbers of the ring")
    sp.add_argument("--cutoff", type=int, required=True)
    sp.add_argument("--window", type=int, help="cap on internal degrees examined")
    sp = add("check-sdc", cmd_check_sdc, "is the candidate semidualizing?")
    sp.add_argument("--candidate", required=True)
    sp.add_argument("--cutoff", type=int, required=True)
    sp.add_argument("--window", type=int)
    sp = add("check-reflexive", cmd_check_reflexive, "is G totally C-reflexive?")
    sp.add_argument("--g", required=True)
    sp.add_argument("--c", required=True)
    sp.add_argument("--cutoff", type=int, required=True)
    sp.add_argument("--window", type=int)
    sp = add("check-chain", cmd_check_chain, "check a chain C0,C1,... in the reflexivity order")
    sp.add_argument("--chain", required=True)
    sp.add_argument("--cutoff", type=int, required=True)
    sp.add_argument("--factorization", action="store_true")
    sp = add("verify-bounds", cmd_verify_bounds, "Bass-number bounds on chains")
    sp.add_argument("--thm", choices=("0101", "0101p", "0103", "0102"), required=True)
    sp.add_argument("--d", type=int)
    sp.add_argument("--g", type=int)
    sp.add_argument("--p", type=int)
    sp.add_argument("--mu", type=int, help="type value for 0101p instead of computing it")
    sp.add_argument("--cutoff", type=int, default=4)
    sp.add_argument("--window", type=int)
    sp = add("series-mul", cmd_series_mul, "multiply two truncated series")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.add_argument("--a-offset", type=int, default=0)
    sp.add_argument("--b-offset", type=int, default=0)
    sp.add_argument("--exact", action="store_true", help="treat inputs as polynomials")
    return p


def run(argv):
    """``(exit code, stdout text, stderr text)``."""
    try:
        args = build_parser().parse_args(argv)
        for key in ("length", "cutoff"):
            if getattr(args, key, 0) is not None and getattr(args, key, 0) < 0:
                raise UsageError(f"--{key} must be nonnegative")
        rep = args.func(args, _Context(args.ring))
    except UsageError as err:
        return EXIT_USAGE, "", f"semidual: {err}\n"
    except (RingFileError, PolynomialSyntaxError, ExpressionError) as err:
        return EXIT_USAGE, "", f"semidual: {err}\n"
    except WindowError as err:
        rep = Report().status(status=INCONCLUSIVE, reason="window", degree=err.degree)
        rep.exit_code = EXIT_INCONCLUSIVE
        return EXIT_INCONCLUSIVE, emit_report(rep, getattr(args, "format", "machine")), ""
    except ValueError as err:
        return EXIT_USAGE, "", f"semidual: {err}\n"
    return rep.exit_code, emit_report(rep, args.format), ""


def main(argv=None):
    code, out, err = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
