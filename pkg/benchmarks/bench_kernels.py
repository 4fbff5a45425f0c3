"""Compare the numba and pure-numpy factorization sweeps.

    python3 benchmarks/bench_kernels.py --max-k 9 --repeat 3

Reports the best wall time of the raw table sweep and of the full Kerov
enumeration for each backend, and checks the two backends agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from kerovchar import _accel
from kerovchar._kernels import factorization_table
from kerovchar.kerov import _graph_colorings, kerov_polynomial
from kerovchar.perm import long_cycle


def best_of(repeat, fn):
    best = float("inf")
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--min-k", type=int, default=5)
    parser.add_argument("--max-k", type=int, default=9)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = [b for b in _accel.BACKENDS if b != "numba" or _accel.HAS_NUMBA]
    # compile (or load from cache) before timing
    for b in backends:
        factorization_table(long_cycle(3).zero_based(), -1, b)

    print(f"{'k':>3} {'rows':>9} " + " ".join(f"{b + ' sweep':>13} {b + ' kerov':>13}" for b in backends) + f" {'speedup':>8}")
    for k in range(args.min_k, args.max_k + 1):
        target = long_cycle(k).zero_based()
        sweeps, results = {}, {}
        for b in backends:
            sweeps[b], table = best_of(args.repeat, lambda: factorization_table(target, -1, b))
            results[b] = table

            def full():
                _graph_colorings.cache_clear()
                return kerov_polynomial(k, backend=b)

            results[b + "-kerov"] = best_of(args.repeat, full)
        if len(backends) == 2:
            a, c = results["numba"], results["numpy"]
            assert all(np.array_equal(x, y) for x, y in zip(a, c)), f"backends disagree at k={k}"
            assert results["numba-kerov"][1].polynomial == results["numpy-kerov"][1].polynomial
        rows = len(results[backends[0]])
        cells = " ".join(f"{sweeps[b]:>12.4f}s {results[b + '-kerov'][0]:>12.4f}s" for b in backends)
        speed = f"{sweeps['numpy'] / sweeps['numba']:>7.1f}x" if len(backends) == 2 else ""
        print(f"{k:>3} {rows:>9} {cells} {speed}")


if __name__ == "__main__":
    main()
