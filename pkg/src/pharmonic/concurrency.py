"""Worker-pool helpers.

The environment variable PHARMONIC_THREADS caps the number of worker
threads used for embarrassingly parallel loops (family members, sample
batches).  Results are always reduced in input order, so the output is
independent of the worker count.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

_ENV_VAR = "PHARMONIC_THREADS"


def worker_count() -> int:
    """Number of worker threads to use, at least 1."""
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def map_ordered(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Apply fn to every item, preserving input order in the result list."""
    seq: Sequence[T] = list(items)
    n = worker_count()
    if n <= 1 or len(seq) <= 1:
        return [fn(item) for item in seq]
    with ThreadPoolExecutor(max_workers=min(n, len(seq))) as pool:
        return list(pool.map(fn, seq))
