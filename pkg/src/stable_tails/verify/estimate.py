"""Tail-probability estimates with exact binomial confidence intervals."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from ..errors import DomainError

__all__ = ["MCEstimate", "QuadratureEstimate", "clopper_pearson", "tail_count", "estimate_from_samples",
           "empirical_tail", "DEFAULT_CONFIDENCE"]

DEFAULT_CONFIDENCE = 0.99


def clopper_pearson(hits: int, n: int, confidence: float = DEFAULT_CONFIDENCE) -> tuple[float, float]:
    """Two-sided exact interval for a binomial proportion."""
    if not 0.0 < confidence < 1.0:
        raise DomainError(f"confidence must lie in (0, 1), got {confidence}")
    if n <= 0 or not 0 <= hits <= n:
        raise DomainError(f"need 0 <= hits <= n and n > 0, got hits={hits}, n={n}")
    q = 0.5 * (1.0 - confidence)
    lo = 0.0 if hits == 0 else float(stats.beta.ppf(q, hits, n - hits + 1))
    hi = 1.0 if hits == n else float(stats.beta.ppf(1.0 - q, hits + 1, n - hits))
    return lo, hi


@dataclass(frozen=True)
class MCEstimate:
    p_hat: float
    n: int
    hits: int
    ci_low: float
    ci_high: float
    confidence: float
    seed: int
    method: str = "mc"

    def as_dict(self) -> dict:
        return {"p_hat": self.p_hat, "n": self.n, "hits": self.hits, "ci_low": self.ci_low,
                "ci_high": self.ci_high, "confidence": self.confidence, "seed": self.seed, "method": self.method}


@dataclass(frozen=True)
class QuadratureEstimate:
    """A deterministic probability with an absolute error band."""

    p_hat: float
    abserr: float
    method: str = "quadrature"

    @property
    def ci_low(self) -> float:
        return max(0.0, self.p_hat - self.abserr)

    @property
    def ci_high(self) -> float:
        return min(1.0, self.p_hat + self.abserr)

    def as_dict(self) -> dict:
        return {"p_hat": self.p_hat, "n": 0, "hits": 0, "ci_low": self.ci_low, "ci_high": self.ci_high,
                "confidence": 1.0, "seed": 0, "method": self.method}


def tail_count(samples: np.ndarray, threshold: float, side: str) -> int:
    if side == "right":
        return int(np.count_nonzero(samples >= threshold))
    if side == "left":
        return int(np.count_nonzero(samples <= threshold))
    raise DomainError(f"side must be 'right' or 'left', got {side!r}")


def estimate_from_samples(samples: np.ndarray, threshold: float, side: str = "right",
                          confidence: float = DEFAULT_CONFIDENCE, seed: int = 0) -> MCEstimate:
    n = int(samples.size)
    k = tail_count(samples, threshold, side)
    lo, hi = clopper_pearson(k, n, confidence)
    return MCEstimate(k / n, n, k, lo, hi, confidence, int(seed))


def empirical_tail(source, threshold: float, n: int, confidence: float = DEFAULT_CONFIDENCE, seed: int = 0,
                   side: str = "right") -> MCEstimate:
    """``P(V >= threshold)`` (or ``<=`` for ``side="left"``) from ``n`` draws of ``source``."""
    if n < 100:
        raise DomainError(f"n must be at least 100, got {n}")
    if not 0.5 < confidence < 1.0:
        raise DomainError(f"confidence must lie in (0.5, 1), got {confidence}")
    if math.isnan(threshold):
        raise DomainError("threshold is NaN")
    return estimate_from_samples(source.draw(n, seed), threshold, side, confidence, seed)
