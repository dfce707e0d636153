"""Time one LBFS per backend on random bipartite graphs.

    python benchmarks/bench_lbfs.py --n 100000 --m 1000000 2000000
"""

import argparse
import time

from lexsearch import _kernels
from lexsearch.generators import random_bipartite


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--n", type=int, default=100_000)
    p.add_argument("--m", type=int, nargs="+", default=[250_000, 500_000, 1_000_000])
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--seed", type=int, default=1)
    args = p.parse_args()

    backends = _kernels.backends()
    print(f"{'m':>10} " + " ".join(f"{name:>10}" for name in backends) + "   speedup")
    for m in args.m:
        g = random_bipartite(args.n, m, args.seed)
        indptr, indices = g.csr
        times = {}
        for name, mod in backends.items():
            times[name] = best_of(lambda mod=mod: mod.lbfs_order(indptr, indices, args.n, 0), args.repeats)
        cells = " ".join(f"{times[name]:>9.3f}s" for name in backends)
        speedup = f"{times['python'] / times['cython']:>8.1f}x" if "cython" in times else "       -"
        print(f"{m:>10} {cells} {speedup}")


if __name__ == "__main__":
    main()
