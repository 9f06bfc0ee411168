"""Exact compound-Poisson samplers for the large-jump part ``X^1``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..core import ASYMMETRIC, SYMMETRIC, check_alpha
from ..errors import DomainError
from .arrivals import ArrivalStream
from .sharding import DEFAULT_SHARD_SIZE, run_sharded

__all__ = ["TruncationSplit", "sample_xupper", "xupper_batch", "pareto_jumps"]


@dataclass(frozen=True)
class TruncationSplit:
    """Large-jump part of the split at ``|x| = 1`` for ``alpha in (1, 2)``.

    Asymmetric: ``X^1 = sum_{k<=N} Y_k - 1/(alpha-1)`` with
    ``N ~ Poisson(1/alpha)`` and ``P(Y > y) = y^(-alpha)`` on ``(1, inf)``.
    Symmetric: ``sum_{k<=N} Y_k`` with ``N ~ Poisson(2/alpha)`` and ``Y``
    carrying an independent random sign.
    """

    alpha: float
    kind: str = ASYMMETRIC

    def __post_init__(self):
        check_alpha(self.alpha, allow="high")
        if self.kind not in (ASYMMETRIC, SYMMETRIC):
            raise DomainError(f"kind must be {ASYMMETRIC!r} or {SYMMETRIC!r}, got {self.kind!r}")

    @property
    def symmetric(self) -> bool:
        return self.kind == SYMMETRIC

    @property
    def jump_rate(self) -> float:
        return (2.0 if self.symmetric else 1.0) / self.alpha

    @property
    def drift(self) -> float:
        return 0.0 if self.symmetric else -1.0 / (self.alpha - 1.0)


def pareto_jumps(rng: np.random.Generator, alpha: float, size, symmetric: bool = False) -> np.ndarray:
    """Pareto(alpha) jumps on ``(1, inf)``, optionally with random signs."""
    # 1 - U avoids a zero base; the result is >= 1 exactly
    y = np.power(1.0 - rng.random(size), -1.0 / alpha)
    if symmetric:
        y *= 1.0 - 2.0 * (rng.random(size) < 0.5)
    return y


def sample_xupper(split: TruncationSplit, stream: ArrivalStream | None = None) -> float:
    """One exact draw of ``X^1``; no truncation is involved."""
    rng = (stream or ArrivalStream()).rng
    n = int(rng.poisson(split.jump_rate))
    jumps = pareto_jumps(rng, split.alpha, n, split.symmetric)
    return float(jumps.sum()) + split.drift


def xupper_batch(split: TruncationSplit, n: int, seed: int = 0, shard_size: int = DEFAULT_SHARD_SIZE,
                 return_counts: bool = False):
    """``n`` exact draws of ``X^1``; with ``return_counts`` also the jump counts."""

    def work(rng, size):
        counts = rng.poisson(split.jump_rate, size)
        rows = np.repeat(np.arange(size), counts)
        jumps = pareto_jumps(rng, split.alpha, rows.size, split.symmetric)
        values = np.bincount(rows, weights=jumps, minlength=size) + split.drift
        return np.column_stack([values, counts]).ravel()

    both = run_sharded(work, n, seed, shard_size).reshape(-1, 2)
    if return_counts:
        return both[:, 0], both[:, 1].astype(np.int64)
    return both[:, 0]
