"""Deterministic fan-out for search sweeps.

Tasks are (function, args) pairs over picklable values; results come back in
task order, so callers can reduce them deterministically regardless of worker
count or scheduling.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor


def run_tasks(tasks, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(*args) for fn, args in tasks]
    with ProcessPoolExecutor(max_workers=min(workers, len(tasks))) as pool:
        futures = [pool.submit(fn, *args) for fn, args in tasks]
        return [f.result() for f in futures]
