#!/usr/bin/env python3
"""Timing comparison of the pure-Python and compiled combine cores.

Runs the full combine on dense full-space spectra, single-weight queries on
length-1024 components, and a random depth-8 tree recursion, once per
available backend, and prints a small table.

Usage: python benchmarks/bench_combine.py [--sizes 64,128,256] [--repeats 3]
"""

import argparse
import random
import time
from fractions import Fraction

from plotkin_wef import (
    WeightEnumerator,
    combine,
    combine_single_weight,
    ensemble_wef,
    kernel,
    shared_table,
    tree_from_active_set,
)


def full_space_spectrum(n: int) -> WeightEnumerator:
    row = shared_table(n).rows[n]
    return WeightEnumerator(n, tuple(Fraction(c) for c in row))


def best_of(repeats, fn):
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="64,128,256",
                        help="component lengths for the full combine")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = kernel.available_backends()
    print(f"backends: {', '.join(backends)} (active: {kernel.backend_name()})")

    cases = []
    for n in sizes:
        u = full_space_spectrum(n)
        cases.append((f"combine n={n}", lambda u=u: combine(u, u)))
    u1024 = full_space_spectrum(1024)
    cases.append(
        ("single w=1024 @ n=1024", lambda: combine_single_weight(u1024, u1024, 1024))
    )
    tree = tree_from_active_set(8, random.Random(99).sample(range(256), 128))
    cases.append(("depth-8 tree (rate 1/2)", lambda: ensemble_wef(tree)))

    width = max(len(name) for name, _ in cases)
    header = f"{'case':<{width}}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) > 1:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in cases:
        times = {}
        for backend in backends:
            with kernel.use_backend(backend):
                times[backend] = best_of(args.repeats, fn)
        line = f"{name:<{width}}  " + "  ".join(
            f"{times[b]:>9.3f}s" for b in backends
        )
        if "python" in times and "cython" in times:
            line += f"  {times['python'] / times['cython']:>7.2f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
