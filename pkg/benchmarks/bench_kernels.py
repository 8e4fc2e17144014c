"""Time the numba kernels against their numpy fallbacks on identical inputs.

    python benchmarks/bench_kernels.py [--repeat 5] [--n 18]

Both variants are called directly, so ``ODDCOLOUR_DISABLE_JIT`` is irrelevant
here; outputs are compared before anything is timed.
"""
import argparse
import time

import numpy as np

from oddcolour import _kernels as K
from oddcolour._jit import JIT_AVAILABLE
from oddcolour.generators import random_gnp


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def gf2_case(size, seed=0):
    rng = np.random.default_rng(seed)
    words = (size + 63) // 64
    rows = rng.integers(0, 2**63, size=(size, words), dtype=np.uint64)
    rhs = rng.integers(0, 2, size=size, dtype=np.uint8)
    return rows, rhs


def dp_case(n, seed=0):
    g = random_gnp(n, 0.3, seed=seed)
    return np.array(g.adj, dtype=np.int64), n


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--n", type=int, default=16, help="vertices for the subset kernels")
    ap.add_argument("--size", type=int, default=512, help="square GF(2) system size")
    args = ap.parse_args()
    if not JIT_AVAILABLE:
        print("numba unavailable (or disabled); only the numpy timings mean anything")

    rows, rhs = gf2_case(args.size)
    adj, n = dp_case(args.n)
    good = K._good_subsets_numpy(adj, n, 0)
    sets = np.flatnonzero(good).astype(np.int64)
    lows = np.log2(sets & -sets).astype(np.int64)
    order = np.lexsort((sets, lows))
    sets, lows = sets[order], lows[order]
    offsets = np.searchsorted(lows, np.arange(n + 1)).astype(np.int64)

    cases = {
        f"gf2_eliminate {args.size}x{args.size}": (
            lambda: K._gf2_eliminate_jit(rows.copy(), rhs.copy(), args.size),
            lambda: K._gf2_eliminate_numpy(rows.copy(), rhs.copy(), args.size),
        ),
        f"good_subsets n={n}": (
            lambda: K._good_subsets_jit(adj, n, 0),
            lambda: K._good_subsets_numpy(adj, n, 0),
        ),
        f"partition_dp n={n}": (
            lambda: K._partition_dp_jit(n, offsets, sets),
            lambda: K._partition_dp_numpy(n, offsets, sets),
        ),
    }

    # agreement first (this also triggers compilation)
    a, b = cases[f"gf2_eliminate {args.size}x{args.size}"]
    assert a()[0] == b()[0]
    a, b = cases[f"good_subsets n={n}"]
    assert np.array_equal(a(), b())
    a, b = cases[f"partition_dp n={n}"]
    assert a()[-1] == b()[-1]

    print(f"{'kernel':<28}{'numba s':>10}{'numpy s':>10}{'speedup':>9}")
    for name, (jit_fn, np_fn) in cases.items():
        tj = best_of(jit_fn, args.repeat)
        tn = best_of(np_fn, args.repeat)
        print(f"{name:<28}{tj:>10.4f}{tn:>10.4f}{tn / tj:>8.1f}x")


if __name__ == "__main__":
    main()
