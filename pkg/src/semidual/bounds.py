"""Numeric predicates on Bass series: lower bounds, chain-length bounds, rigidity.

Each predicate returns a :class:`BoundReport` whose outcome is ``holds``,
``fails`` (with the first violating exponent) or ``inconclusive`` when the
series is not known far enough.  A conclusion key is attached only to
decisive outcomes.
"""
import math
from dataclasses import dataclass, field

from .series import LaurentPolyZ

HOLDS, FAILS, INCONCLUSIVE = "holds", "fails", "inconclusive"


@dataclass
class BoundReport:
    name: str
    outcome: str
    witness_i: int = None
    conclusion: str = None
    condition: str = None
    values: dict = field(default_factory=dict)


def _reliable_top(s):
    return math.inf if s.trunc is None else s.trunc


def coeffwise_geq(a, b):
    """``(outcome, first failing exponent)`` for ``a_i >= b_i`` on the common reliable range."""
    lo = min(a.offset, b.offset)
    hi = min(_reliable_top(a), _reliable_top(b))
    if hi == math.inf:
        hi = max(a.top, b.top)
    if hi < lo:
        return INCONCLUSIVE, None
    for n in range(lo, hi + 1):
        if a[n] < b[n]:
            return FAILS, n
    return HOLDS, None


def lower_bound_poly(d, g, n):
    """``t^g (1 + t + t^2 + ...)^(d+1)`` known to ``t^(g+n)``: coefficient ``C(i+d, d)``."""
    if d < 0 or n < 0:
        raise ValueError("d and n must be nonnegative")
    return LaurentPolyZ(g, tuple(math.comb(i + d, d) for i in range(n + 1)), g + n)


def big_omega(n):
    """Number of prime factors of ``n`` counted with multiplicity."""
    if n < 1:
        raise ValueError("big_omega needs a positive integer")
    count, p = 0, 2
    while p * p <= n:
        while n % p == 0:
            n //= p
            count += 1
        p += 1
    return count + (1 if n > 1 else 0)


def smallest_prime_factor(n):
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n if n > 1 else None


def verify_thm0101(bass, g, d, n=None):
    """A chain of length ``d+1`` forces ``mu^(g+i) >= C(i+d, d)``."""
    if n is None:
        n = bass.trunc - g if bass.trunc is not None else max(bass.top - g + 1, d + 1)
    if n < 0:
        return BoundReport("thm0101", INCONCLUSIVE, values={"d": d, "g": g})
    outcome, where = coeffwise_geq(bass, lower_bound_poly(d, g, n))
    conclusion = f"no-chain-of-length-{d + 1}" if outcome == FAILS else None
    return BoundReport("thm0101", outcome, where, conclusion, values={"d": d, "g": g, "n": n})


def verify_prop0101(mu_g, d):
    """``d <= Omega(mu^g)``; a prime type makes every semidualizing module free or dualizing."""
    if mu_g < 1:
        raise ValueError("the type must be a positive integer")
    h = big_omega(mu_g)
    outcome = HOLDS if d <= h else FAILS
    conclusion = "free-or-dualizing" if h == 1 else None
    if outcome == FAILS:
        conclusion = f"no-chain-of-length-{d}"
    return BoundReport("prop0101", outcome, None, conclusion, values={"mu": mu_g, "d": d, "h": h})


def verify_prop0103(bass, g, d=None):
    """``d <= mu^(g+1)``; without ``d`` only the bound is reported."""
    if not bass.reliable(g + 1):
        return BoundReport("prop0103", INCONCLUSIVE, values={"g": g})
    bound = bass[g + 1]
    values = {"g": g, "bound": bound}
    if d is None:
        conclusion = "only-trivial-chains" if bound == 0 else f"max-chain-length-{bound}"
        return BoundReport("prop0103", HOLDS, g + 1, conclusion, values=values)
    values["d"] = d
    if d <= bound:
        return BoundReport("prop0103", HOLDS, g + 1, None, values=values)
    return BoundReport("prop0103", FAILS, g + 1, f"no-chain-of-length-{d}", values=values)


def verify_prop0102(bass, g, p=None):
    """Scan for ``mu^i <= i - g`` (a) or, given ``p``, ``mu^i < 2p + i - g - 1`` for ``i > g`` (b)."""
    # an exact series is known to vanish past its top, so one more index is safe
    hi = bass.top + 1 if bass.exact else bass.top
    for i in range(g, hi + 1):
        mu = bass[i]
        if mu <= i - g:
            return BoundReport("prop0102", HOLDS, i, "free-or-dualizing", "a", {"g": g, "mu": mu})
        if p is not None and i > g and mu < 2 * p + i - g - 1:
            return BoundReport("prop0102", HOLDS, i, "free-or-dualizing", "b", {"g": g, "mu": mu, "p": p})
    return BoundReport("prop0102", INCONCLUSIVE, None, None, None, {"g": g, "scanned": hi})
