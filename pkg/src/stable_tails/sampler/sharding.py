"""Deterministic sharding of batch draws over worker threads."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

import numpy as np

from .arrivals import make_rng

DEFAULT_SHARD_SIZE = 1 << 17
THREADS_ENV = "STABLE_TAILS_THREADS"


def worker_count() -> int:
    cap = os.environ.get(THREADS_ENV)
    n = os.cpu_count() or 1
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            pass
    return n


def shard_sizes(n: int, shard_size: int = DEFAULT_SHARD_SIZE) -> list[int]:
    full, rest = divmod(int(n), int(shard_size))
    return [shard_size] * full + ([rest] if rest else [])


def run_sharded(
    fn: Callable[[np.random.Generator, int], np.ndarray],
    n: int,
    seed: int,
    shard_size: int = DEFAULT_SHARD_SIZE,
    workers: int | None = None,
) -> np.ndarray:
    """Evaluate ``fn(rng_k, size_k)`` for every shard and concatenate in order.

    Shard ``k`` always uses sub-stream ``(seed, k)``, so the output depends
    on ``(seed, n, shard_size)`` only and not on the worker count.
    """
    sizes = shard_sizes(n, shard_size)
    if not sizes:
        return np.empty(0)
    workers = worker_count() if workers is None else workers
    jobs = [(k, s) for k, s in enumerate(sizes)]
    if workers <= 1 or len(jobs) == 1:
        parts = [fn(make_rng(seed, k), s) for k, s in jobs]
    else:
        with ThreadPoolExecutor(max_workers=min(workers, len(jobs))) as pool:
            parts = list(pool.map(lambda job: fn(make_rng(seed, job[0]), job[1]), jobs))
    return np.concatenate(parts)
