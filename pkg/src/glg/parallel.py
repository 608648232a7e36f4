"""Order-preserving process pool map."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: int | None) -> int:
    """Explicit value, else ``GLG_THREADS``, else 1."""
    if threads is None:
        env = os.environ.get("GLG_THREADS", "")
        threads = int(env) if env.strip() else 1
    if threads < 1:
        raise ValueError("thread count must be at least 1")
    return threads


def pmap(func: Callable[[T], R], items: Iterable[T], threads: int | None = 1, chunksize: int = 64) -> Iterator[R]:
    """Map ``func`` over ``items`` in input order; ``func`` must be picklable."""
    threads = resolve_threads(threads)
    if threads == 1:
        yield from map(func, items)
        return
    with ProcessPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(func, items, chunksize=chunksize)
