"""Compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Every workload is run on both backends, the results are compared, and the
best-of-N wall time per backend is printed with the speedup.
"""

import argparse
import random
import sys
import time

from sparse_implicit import _kernels_py
from sparse_implicit._bigint import mpz
from sparse_implicit.matrep import build_hirzebruch_rep, build_matrix_rep
from sparse_implicit.expr import parse_system

try:
    from sparse_implicit import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def dense(rng, n, m, lo=-50, hi=50):
    return [[mpz(rng.randint(lo, hi)) for _ in range(m)] for _ in range(n)]


def sparse_rows(A):
    return [{j: x for j, x in enumerate(r) if x} for r in A]


def workloads():
    rng = random.Random(1)
    out = []
    A = dense(rng, 40, 40)
    out.append(("det_bareiss 40x40", "det_bareiss", lambda: (A,)))
    B = dense(rng, 30, 60)
    out.append(("rank_bareiss 30x60", "rank_bareiss", lambda: (B, 60)))
    quad, _ = parse_system(["1 + 3*s1 + s1^2 + 2*s2 + s1*s2", "5 - s1 - s1^2 + 2*s2 - s1*s2",
                            "7 + 3*s1 + 2*s1^2 + 6*s2 + 3*s1*s2",
                            "11 + 3*s1 + 4*s1^2 + 3*s2 + 5*s1*s2"])
    M = build_matrix_rep(quad)
    E = [[mpz(int(x)) for x in r] for r in M.evaluate((3, -7, 11, 5))]
    out.append(("sparse_rank cubic MatRep 12x26", "sparse_rank",
                lambda: (sparse_rows(E), M.ncols)))
    torus, _ = parse_system(["1 - s2*s1", "-s2*s1^36 + 1", "-s2*(-s1^38 + s2)", "s1^37 - s2"])
    H = build_hirzebruch_rep(torus, 38, 2, 0)
    HE = [[mpz(int(x)) for x in r] for r in H.evaluate((2, -3, 5, 7))]
    out.append(("sparse_rank torus MatRep 152x194", "sparse_rank",
                lambda: (sparse_rows(HE), H.ncols)))
    S = [[0 if rng.random() < 0.7 else mpz(rng.randint(-9, 9)) for _ in range(60)]
         for _ in range(45)]
    out.append(("sparse_rref 45x60 (30% fill)", "sparse_rref", lambda: (sparse_rows(S), 60)))
    return out


def best_of(fn, args_fn, repeat):
    best, result = None, None
    for _ in range(repeat):
        args = args_fn()
        t = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t
        best = dt if best is None else min(best, dt)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _kernels_c is None:
        print("compiled kernels are not built; only the Python backend is available")
        return 1
    print(f"{'workload':36} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn_name, args_fn in workloads():
        tp, rp = best_of(getattr(_kernels_py, fn_name), args_fn, args.repeat)
        tc, rc = best_of(getattr(_kernels_c, fn_name), args_fn, args.repeat)
        if rp != rc:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        print(f"{name:36} {tp:10.4f} {tc:10.4f} {tp / tc:7.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
