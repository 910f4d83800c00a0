"""Order-preserving map over a process pool.

The worker count comes from the ``workers`` argument, else the
``INTFAM_WORKERS`` environment variable, else the CPU count. Results are
always returned in input order, so the count never changes an outcome.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

ENV_VAR = "INTFAM_WORKERS"
# below this many items the pool start-up cost dominates
MIN_PARALLEL_ITEMS = 32


def resolve_workers(workers=None) -> int:
    if workers is None:
        env = os.environ.get(ENV_VAR)
        workers = int(env) if env else (os.cpu_count() or 1)
    return max(1, int(workers))


def ordered_map(fn, items, workers=None) -> list:
    items = list(items)
    n = resolve_workers(workers)
    if n == 1 or len(items) < MIN_PARALLEL_ITEMS:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * n))))
