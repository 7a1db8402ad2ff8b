#!/usr/bin/env python3
"""Benchmark the compiled GF(2) kernels against the pure-Python fallback.

Times the three hot paths (batched ranks, diagonal-mask sweeps, the tournament
order search) plus two end-to-end jobs, and prints a speedup table.

    python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import random
import time

from booldim import _kernels_py as pure

try:
    from booldim import _kernels_cy as compiled
except ImportError:
    compiled = None


def _random_symmetric(rng, n):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return tuple(rows)


def _random_tournament(rng, n):
    arcs = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                arcs[i] |= 1 << j
            else:
                arcs[j] |= 1 << i
    return tuple(arcs)


def bench_rank(backend, quick):
    rng = random.Random(1)
    mats = [_random_symmetric(rng, 16) for _ in range(200)]
    reps = 20 if quick else 100
    start = time.perf_counter()
    for _ in range(reps):
        for rows in mats:
            backend.rank(rows, 16)
    return time.perf_counter() - start


def bench_sweep(backend, quick):
    rng = random.Random(2)
    n = 12 if quick else 14
    rows = _random_symmetric(rng, n)
    start = time.perf_counter()
    backend.diagonal_sweep(rows, n, True, 0, 0, 1 << n)
    return time.perf_counter() - start


def bench_search(backend, quick):
    rng = random.Random(3)
    n = 6 if quick else 7
    total = 0.0
    for _ in range(3):
        arcs = _random_tournament(rng, n)
        start = time.perf_counter()
        backend.inversion_search(arcs, n, n)
        total += time.perf_counter() - start
    return total


def bench_canon(backend, quick):
    rng = random.Random(4)
    ts = [_random_tournament(rng, 6) for _ in range(40 if quick else 200)]
    start = time.perf_counter()
    for arcs in ts:
        backend.canon_tournament(arcs, 6)
    return time.perf_counter() - start


BENCHES = [
    ("rank 16x16 batch", bench_rank),
    ("boolean-mode diagonal sweep", bench_sweep),
    ("tournament order search", bench_search),
    ("canonical form n=6", bench_canon),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller sizes")
    args = parser.parse_args()

    print(f"{'benchmark':<30} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in BENCHES:
        t_pure = fn(pure, args.quick)
        if compiled is None:
            print(f"{name:<30} {t_pure:>9.3f}s {'n/a':>10} {'-':>8}")
            continue
        t_comp = fn(compiled, args.quick)
        print(
            f"{name:<30} {t_pure:>9.3f}s {t_comp:>9.3f}s "
            f"{t_pure / max(t_comp, 1e-9):>7.1f}x"
        )
    if compiled is None:
        print("\ncompiled extension not importable; showing pure timings only")


if __name__ == "__main__":
    main()
