"""Seeded random bounded complexes of free modules over small artinian rings."""
import numpy as np

from semidual import GF, QQ, build_algebra, minimal_free_resolution, presented_module
from semidual.complexes import Complex, free_complex, tensor_complex
from semidual.modules import RMatrix

_RINGS = {}


def rings():
    if not _RINGS:
        _RINGS["m2"] = build_algebra(GF(7), "xy", ["x^2", "x*y", "y^2"], 6)
        _RINGS["gor"] = build_algebra(QQ, "x", ["x^2"], 8)
        _RINGS["ci"] = build_algebra(GF(5), "xy", ["x^2", "y^2"], 6)
        _RINGS["ciq"] = build_algebra(QQ, "xy", ["x^2", "y^2"], 6)
    return _RINGS


def random_form(R, d, rng):
    """Nonzero homogeneous polynomial dict of degree ``d`` (None if ``R_d = 0``)."""
    monos = R.basis[d] if d < len(R.basis) else []
    if not monos:
        return None
    while True:
        c = rng.integers(-2, 3, len(monos))
        if c.any():
            return {m: int(a) for m, a in zip(monos, c) if a}


def koszul(R, f, d):
    """``R(-d) --f--> R`` in homological degrees 1, 0."""
    D = RMatrix.from_polynomials(R, [d], [0], [[f]])
    return free_complex(R, {0: [0], 1: [d]}, {1: D})


def random_cyclic(R, rng):
    forms = [random_form(R, int(rng.integers(1, 3)), rng) for _ in range(int(rng.integers(1, 3)))]
    forms = [f for f in forms if f]
    if not forms:
        forms = [random_form(R, 1, rng)]
    return presented_module(R, [0], [[f] for f in forms])


def random_resolution(R, rng, length=None):
    M = random_cyclic(R, rng)
    n = int(rng.integers(1, 3)) if length is None else length
    return minimal_free_resolution(M, n).complex(n), M


def random_complex(R, rng):
    """A bounded free complex: a truncated resolution, a Koszul complex or a product of two."""
    kind = rng.integers(0, 3)
    if kind == 0:
        X, _ = random_resolution(R, rng)
    elif kind == 1:
        X = koszul(R, random_form(R, 1, rng), 1)
    else:
        X = tensor_complex(koszul(R, random_form(R, 1, rng), 1), koszul(R, random_form(R, 1, rng), 1))
    return X.shift(int(rng.integers(-1, 2))).twist(int(rng.integers(-1, 2)))


def cases(n, seed=0):
    """``n`` seeded ``(ring name, ring, rng)`` triples cycling through the test rings."""
    pool = list(rings().items())
    for i in range(n):
        name, R = pool[i % len(pool)]
        yield name, R, np.random.default_rng([seed, i])
