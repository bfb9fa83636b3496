"""Time the compiled kernels against the pure-Python reference on the same inputs.

    python3 benchmarks/bench_kernels.py [--n 6] [--random 300] [--order 12]
"""

import argparse
import time
from fractions import Fraction

from reedbound import _pykernels as py
from reedbound.corpus import random_graph


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=6, help="order of the exhaustive sweep")
    ap.add_argument("--random", type=int, default=300, help="number of random graphs per kernel")
    ap.add_argument("--order", type=int, default=12, help="order of the random graphs")
    args = ap.parse_args()

    try:
        from reedbound import _ckernels as c
    except ImportError:
        print("compiled extension not available; nothing to compare")
        return
    graphs = [random_graph(args.order, Fraction(1, 2), 2024, i) for i in range(args.random)]
    total = 1 << (args.n * (args.n - 1) // 2)
    cases = [
        (f"sweep n={args.n} ({total} graphs)", lambda m: m.sweep(args.n, 0, total)),
        ("clique", lambda m: [m.clique(g.rows, g.order) for g in graphs]),
        ("chromatic", lambda m: [m.chromatic(g.rows, g.order) for g in graphs]),
        ("matching", lambda m: [m.matching_size(g.rows, g.order) for g in graphs]),
        ("min_missed r=3", lambda m: [m.min_missed(g.rows, g.order, 3) for g in graphs]),
        ("profile", lambda m: [m.profile(g.rows, g.order) for g in graphs]),
    ]
    print(f"{'kernel':32} {'python s':>10} {'compiled s':>11} {'speedup':>8}  agree")
    for name, run in cases:
        a, tp = timed(run, py)
        b, tc = timed(run, c)
        print(f"{name:32} {tp:10.3f} {tc:11.4f} {tp / max(tc, 1e-9):8.1f}  {a == b}")


if __name__ == "__main__":
    main()
