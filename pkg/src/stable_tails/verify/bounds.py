"""Checking tail bounds against sampled (or, for ``X_1``, exactly computed) tail probabilities."""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

from ..analytic.x1_tail import x1_tail_probability
from ..bounds import UPPER, VAR_SMALL, evaluate_or_refuse, get_spec
from ..core import SYMMETRIC
from ..errors import StableTailsError
from ..sampler.sharding import DEFAULT_SHARD_SIZE
from .estimate import DEFAULT_CONFIDENCE, QuadratureEstimate, estimate_from_samples
from .sources import SamplerSource

__all__ = [
    "PASS",
    "FAIL",
    "VACUOUS",
    "INCONCLUSIVE",
    "REFUSED",
    "VERDICTS",
    "PointResult",
    "VerificationReport",
    "verdict_for",
    "config_hash",
    "verify_bound",
    "DEFAULT_N",
    "MAX_N",
    "PLANNED_HITS",
]

PASS, FAIL, VACUOUS, INCONCLUSIVE, REFUSED = "pass", "fail", "vacuous", "inconclusive", "refused"
VERDICTS = (PASS, FAIL, VACUOUS, INCONCLUSIVE, REFUSED)

DEFAULT_N = 1_000_000
MAX_N = 10_000_000
PLANNED_HITS = 100
SCHEMA_VERSION = 1


def verdict_for(direction: str, bound: float, vacuous: bool, ci_low: float, ci_high: float) -> str:
    """Compare a confidence interval with a bound value.

    Upper bounds pass when ``ci_high <= bound`` and fail when ``ci_low > bound``;
    lower bounds pass when ``ci_low >= bound`` and fail when ``ci_high < bound``.
    Vacuous bounds are never counted as passes.
    """
    if vacuous:
        return VACUOUS
    if direction == UPPER:
        if ci_high <= bound:
            return PASS
        return FAIL if ci_low > bound else INCONCLUSIVE
    if ci_low >= bound:
        return PASS
    return FAIL if ci_high < bound else INCONCLUSIVE


@dataclass(frozen=True)
class PointResult:
    alpha: float
    y: float
    threshold: float
    bound_value: float
    raw_value: float
    vacuous: bool
    verdict: str
    estimate: Optional[object] = None
    message: str = ""

    def as_dict(self) -> dict:
        est = self.estimate.as_dict() if self.estimate is not None else None
        return {"alpha": self.alpha, "y": self.y, "threshold": _num(self.threshold), "bound_value": _num(self.bound_value),
                "raw_value": _num(self.raw_value), "vacuous": self.vacuous, "verdict": self.verdict,
                "estimate": est, "message": self.message}


def _num(v):
    return None if v is None or (isinstance(v, float) and not math.isfinite(v)) else v


@dataclass(frozen=True)
class VerificationReport:
    spec_id: str
    alpha: float
    direction: str
    side: str
    variable: str
    source: dict
    n: int
    confidence: float
    seed: int
    scale: float
    config_hash: str
    results: list = field(default_factory=list)

    @property
    def grid(self) -> list[tuple[float, float, float]]:
        return [(r.alpha, r.y, r.threshold) for r in self.results]

    def counts(self) -> dict:
        out = {v: 0 for v in VERDICTS}
        for r in self.results:
            out[r.verdict] += 1
        return out

    @property
    def failed(self) -> bool:
        return any(r.verdict == FAIL for r in self.results)

    def as_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "spec_id": self.spec_id,
            "alpha": self.alpha,
            "direction": self.direction,
            "side": self.side,
            "variable": self.variable,
            "source": self.source,
            "n": self.n,
            "confidence": self.confidence,
            "seed": self.seed,
            "scale": self.scale,
            "config_hash": self.config_hash,
            "counts": self.counts(),
            "results": [r.as_dict() for r in self.results],
        }


def config_hash(config: dict) -> str:
    """First 16 hex digits of the SHA-256 of the canonical JSON encoding."""
    blob = json.dumps(config, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _planned_n(bound: float, n: int, max_n: int) -> int:
    # sizes come from a fixed ladder so escalated points can share samples
    need = max(2 * n, math.ceil(PLANNED_HITS / bound)) if bound > 0 else max_n
    for m in (2, 5, 10, 20, 50, 100, 200, 500, 1000):
        if n * m >= need:
            return min(max_n, n * m)
    return max_n


def _x1_point(spec, alpha, y, ev) -> PointResult:
    tail = x1_tail_probability(alpha, ev.threshold, spec.side, spec.law == SYMMETRIC)
    # quadrature error plus a relative floor for the contour integral
    est = QuadratureEstimate(tail.probability, tail.abserr + 1e-9 * abs(tail.probability))
    verdict = verdict_for(spec.direction, ev.bound_value, ev.vacuous, est.ci_low, est.ci_high)
    return PointResult(alpha, y, ev.threshold, ev.bound_value, ev.raw_value, ev.vacuous, verdict, est)


def verify_bound(spec_id: str, alpha: float, y_grid: Iterable[float], n: int = DEFAULT_N,
                 confidence: float = DEFAULT_CONFIDENCE, seed: int = 0, method: str = "auto",
                 scale: float = 1.0, max_n: int = MAX_N, aux: Optional[dict] = None,
                 shard_size: int = DEFAULT_SHARD_SIZE, source: Optional[SamplerSource] = None) -> VerificationReport:
    """Verify one bound over a ``y`` grid.

    All grid points share one sample of size ``n``.  Lower-bound points that
    come out inconclusive are re-estimated with a larger sample, sized so the
    bound predicts at least 100 hits (capped at ``max_n``).  Statements
    about ``X_1`` are checked against the exact tail from
    :func:`stable_tails.analytic.x1_tail.x1_tail_probability`; no sampler is
    involved.  Per-point errors are recorded, never raised.
    """
    spec = get_spec(spec_id)
    ys = [float(v) for v in y_grid]
    if source is None and spec.variable != VAR_SMALL:
        source = SamplerSource(spec.law, float(alpha), method=method, variable=spec.variable, shard_size=shard_size)
    src_desc = source.describe() if source is not None else {"method": "quadrature", "variable": VAR_SMALL}
    cfg = {"spec_id": spec_id, "alpha": float(alpha), "y_grid": ys, "n": int(n), "confidence": confidence,
           "seed": int(seed), "scale": scale, "max_n": int(max_n), "aux": aux or {}, "source": src_desc}
    results = []
    for y in ys:
        ev = evaluate_or_refuse(spec, alpha, y, aux, scale)
        if not ev.valid:
            results.append(PointResult(float(alpha), y, math.nan, math.nan, math.nan, False, REFUSED, None, ev.message))
            continue
        try:
            if spec.variable == VAR_SMALL:
                results.append(_x1_point(spec, float(alpha), y, ev))
                continue
            est = estimate_from_samples(source.draw(n, seed), ev.threshold, spec.side, confidence, seed)
            verdict = verdict_for(spec.direction, ev.bound_value, ev.vacuous, est.ci_low, est.ci_high)
            if verdict == INCONCLUSIVE and spec.direction != UPPER and n < max_n:
                n2 = _planned_n(ev.bound_value, n, max_n)
                est = estimate_from_samples(source.draw(n2, seed), ev.threshold, spec.side, confidence, seed)
                verdict = verdict_for(spec.direction, ev.bound_value, ev.vacuous, est.ci_low, est.ci_high)
            results.append(PointResult(float(alpha), y, ev.threshold, ev.bound_value, ev.raw_value, ev.vacuous,
                                       verdict, est))
        except StableTailsError as exc:
            results.append(PointResult(float(alpha), y, ev.threshold, ev.bound_value, ev.raw_value, ev.vacuous,
                                       INCONCLUSIVE, None, f"{type(exc).__name__}: {exc}"))
    return VerificationReport(spec_id, float(alpha), spec.direction, spec.side, spec.variable, src_desc, int(n),
                              confidence, int(seed), scale, config_hash(cfg), results)
