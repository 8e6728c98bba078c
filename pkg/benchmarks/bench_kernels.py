"""Compare the compiled and pure-Python cut-set kernels.

    python3 benchmarks/bench_kernels.py [--sizes 10 12 14 16] [--threads 1 4]

Each row times ``cut_set_masks`` on a seeded random clutter and checks
that both backends return the same list.
"""

import argparse
import random
import time

from clutterbei.generate import random_clutter
from clutterbei.kernels import _pykernels

try:
    from clutterbei.kernels import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 12, 14, 16])
    ap.add_argument("--threads", type=int, nargs="+", default=[1, 4])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels not built; only the Python backend is available")

    rng = random.Random(args.seed)
    print(f"{'n':>3} {'edges':>5} {'cut sets':>8} {'python s':>10}", end="")
    for t in args.threads:
        print(f" {'cython x' + str(t) + ' s':>14} {'speedup':>8}", end="")
    print()
    for n in args.sizes:
        C = random_clutter(n, n + n // 2, 3, rng=rng)
        adj = C.graph.adj
        py_t, py_out = best_of(lambda: _pykernels.cut_set_masks(adj, n), 1)
        print(f"{n:>3} {len(C.edges):>5} {len(py_out):>8} {py_t:>10.4f}", end="")
        for t in args.threads:
            if _ckernels is None:
                continue
            c_t, c_out = best_of(lambda: _ckernels.cut_set_masks(adj, n, t), args.repeat)
            assert list(c_out) == list(py_out), "backends disagree"
            print(f" {c_t:>14.4f} {py_t / c_t:>8.1f}", end="")
        print()


if __name__ == "__main__":
    main()
