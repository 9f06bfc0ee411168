"""Chambers-Mallows-Stuck transform, used as an independent oracle sampler.

Produces draws with characteristic function
``exp(-sigma^alpha |t|^alpha (1 - i beta sign(t) tan(pi alpha / 2)))``.
"""

from __future__ import annotations

import math

import numpy as np

from ..core import LevyCanonical, StableParams, from_levy
from ..errors import DomainError
from .arrivals import ArrivalStream
from .sharding import DEFAULT_SHARD_SIZE, run_sharded

__all__ = ["sample_cms", "cms_batch", "cms_transform"]

_SUPPORTED_BETA = (-1.0, 0.0, 1.0)


def _as_params(law) -> StableParams:
    if isinstance(law, LevyCanonical):
        law = from_levy(law)
    if not isinstance(law, StableParams):
        raise TypeError(f"expected StableParams or LevyCanonical, got {type(law).__name__}")
    if law.beta not in _SUPPORTED_BETA:
        raise DomainError(f"CMS oracle supports beta in {{-1, 0, 1}} only, got {law.beta}")
    return law


def cms_transform(alpha: float, beta: float, v, w):
    """Map ``V ~ U(-pi/2, pi/2)`` and ``W ~ Exp(1)`` to a unit-scale stable draw."""
    zeta = beta * math.tan(0.5 * math.pi * alpha)
    b = math.atan(zeta) / alpha
    s = (1.0 + zeta * zeta) ** (0.5 / alpha)
    av = alpha * (v + b)
    return s * np.sin(av) / np.cos(v) ** (1.0 / alpha) * (np.cos(v - av) / w) ** ((1.0 - alpha) / alpha)


def _draw(rng: np.random.Generator, p: StableParams, size):
    v = math.pi * (rng.random(size) - 0.5)
    w = rng.standard_exponential(size)
    return p.sigma * cms_transform(p.alpha, p.beta, v, w)


def sample_cms(law, stream: ArrivalStream | None = None) -> float:
    """One draw from ``law`` (:class:`StableParams` or :class:`LevyCanonical`)."""
    p = _as_params(law)
    rng = (stream or ArrivalStream()).rng
    return float(_draw(rng, p, None))


def cms_batch(law, n: int, seed: int = 0, shard_size: int = DEFAULT_SHARD_SIZE) -> np.ndarray:
    p = _as_params(law)
    return run_sharded(lambda rng, size: _draw(rng, p, size), n, seed, shard_size)
