"""Default y-grids and named verification campaigns."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..bounds import UPPER, VAR_SMALL, evaluate_or_refuse, get_spec, list_specs
from ..core import ASYMMETRIC, SYMMETRIC
from ..errors import DomainError
from ..sampler.sharding import DEFAULT_SHARD_SIZE
from .bounds import DEFAULT_N, FAIL, MAX_N, VERDICTS, VerificationReport, verify_bound
from .estimate import DEFAULT_CONFIDENCE
from .sources import SamplerSource

__all__ = [
    "regime_interval",
    "default_grid",
    "theorem_ids",
    "Campaign",
    "CampaignResult",
    "CAMPAIGNS",
    "campaign_for_law",
    "run_campaign",
    "DEFAULT_POINTS",
    "DEFAULT_SPAN",
]

DEFAULT_POINTS = 20
DEFAULT_SPAN = 100.0
# stretched-exponential regimes decay so fast that a 100x span only adds
# points where every tail is below any sampling resolution
STRETCHED_SPAN = 2.0


def regime_interval(spec_id: str, alpha: float, span: float = DEFAULT_SPAN) -> tuple[float, float]:
    """``(lo, hi)`` range of ``y`` a default grid covers for ``spec_id``.

    Bounded regimes use their own interval; unbounded ones run from the
    regime entry to ``span`` times the entry.
    """
    a = float(alpha)
    d = 2.0 - a
    if spec_id.startswith(("asym01.", "sym01.")) or ".xupper." in spec_id:
        lo = (1.0 / a) ** (1.0 / a) if spec_id.startswith("asym01.upper") else 1.0
        return lo, span * _informative_point(spec_id, a, lo)
    e = 2.0 / math.sqrt(d)
    table = {
        "asym12.right.mid": (e, 1.0 / d),
        "asym12.right.big": (max(1.0 / d, e), span * max(1.0 / d, e)),
        "asym12.left.mid": (e, 2.0 / d),
        "asym12.left.large": (2.0 / d, STRETCHED_SPAN * 2.0 / d),
        "sym12.mid": (e, 2.0 / d),
        "sym12.large": (2.0 / d, span * 2.0 / d),
        "asym12.xlower.right.upper": (0.05 / d, 1.0 / d),
        "asym12.xlower.left.upper": (0.1 / d, 2.0 / d),
        "asym12.xlower.right.lower": (e, 1.0 / d),
        "asym12.xlower.left.lower": (e, 2.0 / d),
        "asym12.xlower.left.large": (2.0 / d, STRETCHED_SPAN * 2.0 / d),
        "sym12.xlower.upper": (0.1 / d, 2.0 / d),
        "sym12.xlower.lower": (e, 2.0 / d),
    }
    for key, val in table.items():
        if spec_id.startswith(key):
            return val
    raise DomainError(f"no default grid for {spec_id!r}")


def _informative_point(spec_id: str, alpha: float, lo: float) -> float:
    """Smallest power-of-two multiple of ``lo`` where an upper bound drops below 1."""
    spec = get_spec(spec_id)
    if spec.direction != UPPER:
        return lo
    y = lo
    for _ in range(200):
        ev = evaluate_or_refuse(spec, alpha, y)
        if ev.valid and ev.raw_value < 1.0:
            return y
        y *= 2.0
    return lo


def default_grid(spec_id: str, alpha: float, points: int = DEFAULT_POINTS, span: float = DEFAULT_SPAN) -> np.ndarray:
    """Log-spaced grid over :func:`regime_interval`; empty when the regime is empty."""
    lo, hi = regime_interval(spec_id, alpha, span)
    if hi < lo:
        return np.empty(0)
    if hi == lo:
        return np.array([lo])
    return np.geomspace(lo, hi, points)


def theorem_ids(law: str, alpha: float) -> list[str]:
    """Theorem-level bound ids that apply to ``law`` at ``alpha``."""
    if alpha < 1.0:
        prefix = "asym01." if law == ASYMMETRIC else "sym01."
    else:
        prefix = "asym12." if law == ASYMMETRIC else "sym12."
    return [s.id for s in list_specs(prefix) if s.variable == "X"]


@dataclass(frozen=True)
class Campaign:
    name: str
    entries: tuple  # (spec_id, alpha, grid)
    description: str = ""


@dataclass
class CampaignResult:
    campaign: str
    reports: list = field(default_factory=list)

    def counts(self) -> dict:
        out = {v: 0 for v in VERDICTS}
        for r in self.reports:
            for k, v in r.counts().items():
                out[k] += v
        return out

    @property
    def failed(self) -> bool:
        return any(r.failed for r in self.reports)

    def failures(self) -> list[tuple[str, float, float]]:
        return [(r.spec_id, p.alpha, p.y) for r in self.reports for p in r.results if p.verdict == FAIL]


def _entries(ids_by_alpha, points, span=DEFAULT_SPAN, grid=None):
    out = []
    for alpha, ids in ids_by_alpha:
        for sid in ids:
            g = np.asarray(grid, dtype=float) if grid is not None else default_grid(sid, alpha, points, span)
            if g.size:
                out.append((sid, alpha, tuple(float(v) for v in g)))
    return tuple(out)


def _build_campaigns() -> dict:
    c = {}
    c["theorem01"] = Campaign("theorem01", _entries(
        [(a, theorem_ids(ASYMMETRIC, a) + theorem_ids(SYMMETRIC, a)) for a in (0.3, 0.5, 0.7)], 5),
        "asymmetric and symmetric bounds for alpha < 1")
    c["asym12"] = Campaign("asym12", _entries([(a, theorem_ids(ASYMMETRIC, a)) for a in (1.5, 1.8)], 5),
                           "asymmetric right and left tails for alpha in (1, 2)")
    c["sym12"] = Campaign("sym12", _entries([(a, theorem_ids(SYMMETRIC, a)) for a in (1.5, 1.9)], 5),
                          "symmetric bounds for alpha in (1, 2)")
    xup = [s.id for s in list_specs("asym12.xupper.") + list_specs("sym12.xupper.")]
    c["xupper"] = Campaign("xupper", _entries([(a, xup) for a in (1.5, 1.8)], 4, grid=(1.5, 2.0, 4.0, 8.0)),
                           "big-jump part X^1 against the compound-Poisson sampler")
    xlow = [s.id for s in list_specs("asym12.xlower.") + list_specs("sym12.xlower.")]
    c["xlower"] = Campaign("xlower", _entries([(a, xlow) for a in (1.5, 1.8)], 5),
                           "small-jump part X_1 against exact contour-integral tails")
    return c


CAMPAIGNS = _build_campaigns()


def campaign_for_law(law: str, alpha: float, points: int = 5, y_grid=None, spec_ids=None) -> Campaign:
    ids = list(spec_ids) if spec_ids else theorem_ids(law, alpha)
    for sid in ids:
        if get_spec(sid).law != law:
            raise DomainError(f"{sid} is a bound for the {get_spec(sid).law} law, not {law}")
    return Campaign(f"{law}-{alpha:g}", _entries([(alpha, ids)], points, grid=y_grid))


def run_campaign(campaign: Campaign | str, n: int = DEFAULT_N, seed: int = 0,
                 confidence: float = DEFAULT_CONFIDENCE, scale: float = 1.0, max_n: int = MAX_N,
                 method: str = "auto", shard_size: int = DEFAULT_SHARD_SIZE,
                 aux: Optional[dict] = None) -> CampaignResult:
    """Run every entry; entries on the same law, ``alpha`` and variable share samples."""
    camp = CAMPAIGNS[campaign] if isinstance(campaign, str) else campaign
    sources: dict = {}
    out = CampaignResult(camp.name)
    for sid, alpha, grid in camp.entries:
        spec = get_spec(sid)
        src = None
        if spec.variable != VAR_SMALL:
            key = (spec.law, alpha, spec.variable)
            if key not in sources:
                sources[key] = SamplerSource(spec.law, alpha, method=method, variable=spec.variable,
                                             shard_size=shard_size)
            src = sources[key]
        spec_aux = {k: v for k, v in (aux or {}).items() if k in spec.aux_params} or None
        out.reports.append(verify_bound(sid, alpha, grid, n=n, confidence=confidence, seed=seed, scale=scale,
                                        max_n=max_n, aux=spec_aux, source=src))
    return out
