"""Sampler descriptors used by the verification harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..core import ASYMMETRIC, SYMMETRIC, LevyCanonical, check_alpha
from ..errors import ConfigurationError
from ..sampler import (
    SeriesConfig,
    TruncationSplit,
    asym01_batch,
    asym12_batch,
    cms_batch,
    residual_batch,
    sym_batch,
    xupper_batch,
)
from ..sampler.sharding import DEFAULT_SHARD_SIZE

__all__ = ["SamplerSource", "default_method", "METHODS"]

METHODS = ("series", "cms", "compound")


def default_method(alpha: float, variable: str = "X") -> str:
    """Series below ``alpha = 1``, CMS above (where the series converges slowly)."""
    if variable == "X^1":
        return "compound"
    return "series" if alpha < 1.0 else "cms"


@dataclass(frozen=True)
class SamplerSource:
    """Draws of ``X`` (``variable="X"``), the big-jump part ``X^1`` or the
    residual series ``S(x)`` (``variable="S"``)."""

    law: str
    alpha: float
    method: str = "auto"
    variable: str = "X"
    x: Optional[float] = None
    series_config: Optional[SeriesConfig] = None
    shard_size: int = DEFAULT_SHARD_SIZE
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        if self.law not in (SYMMETRIC, ASYMMETRIC):
            raise ConfigurationError(f"law must be {SYMMETRIC!r} or {ASYMMETRIC!r}, got {self.law!r}")
        check_alpha(self.alpha)
        if self.variable not in ("X", "X^1", "S"):
            raise ConfigurationError(f"unknown variable {self.variable!r}")
        m = self.resolved_method
        if m not in METHODS:
            raise ConfigurationError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.variable == "X^1" and (m != "compound" or self.alpha < 1.0):
            raise ConfigurationError("X^1 is drawn by the compound-Poisson sampler for alpha in (1, 2)")
        if self.variable == "X" and m == "compound":
            raise ConfigurationError("the compound-Poisson sampler draws X^1, not X")
        if self.variable == "S" and (m != "series" or self.x is None or self.alpha > 1.0):
            raise ConfigurationError("S(x) needs method='series', alpha < 1 and x")

    @property
    def resolved_method(self) -> str:
        return default_method(self.alpha, self.variable) if self.method == "auto" else self.method

    @property
    def canonical(self) -> LevyCanonical:
        return LevyCanonical.symmetric(self.alpha) if self.law == SYMMETRIC else LevyCanonical.asymmetric(self.alpha)

    def describe(self) -> dict:
        return {"law": self.law, "alpha": self.alpha, "method": self.resolved_method, "variable": self.variable,
                "x": self.x, "shard_size": self.shard_size}

    def draw(self, n: int, seed: int = 0) -> np.ndarray:
        """``n`` draws; deterministic in ``(n, seed)``.  The two most recent
        samples are cached so a campaign can alternate between a base and an
        escalated sample size."""
        key = (int(n), int(seed))
        if key in self._cache:
            return self._cache[key]
        out = self._draw(*key)
        if len(self._cache) >= 2:
            self._cache.pop(next(iter(self._cache)))
        self._cache[key] = out
        return out

    def _draw(self, n, seed):
        m = self.resolved_method
        kw = dict(seed=seed, shard_size=self.shard_size)
        if self.variable == "S":
            return residual_batch(self.alpha, self.x, n, cfg=self.series_config, **kw)
        if self.variable == "X^1":
            return xupper_batch(TruncationSplit(self.alpha, self.law), n, **kw)
        if m == "cms":
            return cms_batch(self.canonical, n, **kw)
        if self.law == SYMMETRIC:
            return sym_batch(self.alpha, n, cfg=self.series_config, **kw)
        if self.alpha < 1.0:
            return asym01_batch(self.alpha, n, cfg=self.series_config, **kw)
        return asym12_batch(self.alpha, n, cfg=self.series_config, **kw)
