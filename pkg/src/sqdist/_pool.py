"""Process pool sized by ``SQDIST_THREADS`` (default: number of processors)."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager

ENV_VAR = "SQDIST_THREADS"


def worker_count() -> int:
    raw = os.environ.get(ENV_VAR, "").strip()
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


@contextmanager
def pool_map(workers: int | None = None):
    """Yield an order-preserving ``map``; serial when one worker is requested."""
    workers = worker_count() if workers is None else workers
    if workers <= 1:
        yield map
        return
    with ProcessPoolExecutor(max_workers=workers) as ex:
        yield ex.map
