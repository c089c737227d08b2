"""Compare the numba and numpy GF(p) row-reduction kernels.

    python benchmarks/bench_rref.py [--sizes 50 100 200] [--p 32003] [--repeat 3]
"""
import argparse
import time

import numpy as np

from semidual import _kernels


def best_time(fn, A, p, repeat):
    best = float("inf")
    for _ in range(repeat):
        B = A.copy()
        t0 = time.perf_counter()
        fn(B, p)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--p", type=int, default=32003)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    print(f"backend={_kernels.BACKEND} p={args.p}")
    if _kernels.BACKEND == "numba":
        _kernels.rref_modp(rng.integers(0, args.p, (4, 4)).astype(np.int64), args.p)  # compile
    print(f"{'n':>5} {'numpy_s':>10} {'numba_s':>10} {'speedup':>8}")
    for n in args.sizes:
        A = rng.integers(0, args.p, (n, n + n // 2)).astype(np.int64)
        t_np = best_time(_kernels.rref_modp_numpy, A, args.p, args.repeat)
        if _kernels.BACKEND == "numba":
            r1, _ = _kernels.rref_modp(A.copy(), args.p)
            r2, _ = _kernels.rref_modp_numpy(A.copy(), args.p)
            assert r1 == r2
            t_nb = best_time(_kernels.rref_modp, A, args.p, args.repeat)
            print(f"{n:>5} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>8.1f}")
        else:
            print(f"{n:>5} {t_np:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
