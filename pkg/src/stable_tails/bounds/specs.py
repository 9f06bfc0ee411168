"""Regime-tagged tail bounds and their registry.

A :class:`TailBoundSpec` describes one inequality ``P(V >= threshold) <= value``
(right side) or ``P(V <= threshold) ...`` (left side) for a random variable
``V`` that is either the stable variable ``X`` itself or one of the two
parts of the truncation split (``X^1``: large jumps, ``X_1``: small jumps).
Specs are looked up by a stable string id; :func:`list_specs` gives the full
vocabulary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from ..core import ASYMMETRIC, SYMMETRIC, check_alpha
from ..errors import DomainError, RegimeError

__all__ = [
    "TailBoundSpec",
    "BoundEvaluation",
    "register",
    "get_spec",
    "list_specs",
    "evaluate",
    "evaluate_or_refuse",
    "RIGHT",
    "LEFT",
    "UPPER",
    "LOWER",
    "VAR_X",
    "VAR_BIG",
    "VAR_SMALL",
]

RIGHT, LEFT = "right", "left"
UPPER, LOWER = "upper", "lower"
VAR_X = "X"
VAR_BIG = "X^1"
VAR_SMALL = "X_1"

Validity = Callable[[float, float, Mapping], Optional[str]]


@dataclass(frozen=True)
class TailBoundSpec:
    """One tail inequality.

    ``validity(alpha, y, aux)`` returns ``None`` when the inequality applies
    and otherwise a message stating the violated condition.
    """

    id: str
    law: str
    variable: str
    side: str
    direction: str
    alpha_range: str
    regime: str
    validity: Validity
    threshold_map: Callable[[float, float, Mapping], float]
    value_fn: Callable[[float, float, Mapping], float]
    description: str
    aux_params: Mapping[str, float] = field(default_factory=dict)
    known_invalid: bool = False

    def aux(self, given: Optional[Mapping] = None) -> dict:
        out = dict(self.aux_params)
        if given:
            unknown = set(given) - set(out)
            if unknown:
                raise DomainError(f"{self.id} takes no parameter(s) {sorted(unknown)}")
            out.update(given)
        return out

    def refusal(self, alpha: float, y: float, aux: Optional[Mapping] = None) -> Optional[str]:
        try:
            check_alpha(alpha, allow=self.alpha_range)
        except DomainError as exc:
            return str(exc)
        if not math.isfinite(y):
            return f"y must be finite, got {y}"
        return self.validity(alpha, y, self.aux(aux))

    def applies(self, alpha: float, y: float, aux: Optional[Mapping] = None) -> bool:
        return self.refusal(alpha, y, aux) is None


@dataclass(frozen=True)
class BoundEvaluation:
    spec_id: str
    alpha: float
    y: float
    threshold: float
    bound_value: float
    raw_value: float
    regime: str
    valid: bool
    vacuous: bool
    side: str
    direction: str
    variable: str
    message: str = ""

    def as_row(self) -> dict:
        return {
            "spec_id": self.spec_id,
            "alpha": self.alpha,
            "y": self.y,
            "threshold": self.threshold,
            "bound_value": self.bound_value,
            "raw_value": self.raw_value,
            "regime": self.regime,
            "valid": self.valid,
            "vacuous": self.vacuous,
            "side": self.side,
            "direction": self.direction,
            "variable": self.variable,
            "message": self.message,
        }


_REGISTRY: dict[str, TailBoundSpec] = {}


def register(spec: TailBoundSpec) -> TailBoundSpec:
    if spec.id in _REGISTRY:
        raise ValueError(f"duplicate bound id {spec.id!r}")
    if spec.law not in (SYMMETRIC, ASYMMETRIC):
        raise ValueError(f"bad law {spec.law!r} for {spec.id}")
    _REGISTRY[spec.id] = spec
    return spec


def get_spec(spec_id: str) -> TailBoundSpec:
    try:
        return _REGISTRY[spec_id]
    except KeyError:
        raise DomainError(f"unknown bound id {spec_id!r}; see list_specs()") from None


def list_specs(prefix: str = "", variable: Optional[str] = None) -> list[TailBoundSpec]:
    out = [s for k, s in _REGISTRY.items() if k.startswith(prefix)]
    if variable is not None:
        out = [s for s in out if s.variable == variable]
    return out


def evaluate(spec_id: str | TailBoundSpec, alpha: float, y: float, aux: Optional[Mapping] = None,
             scale: float = 1.0) -> BoundEvaluation:
    """Evaluate a bound, refusing (:class:`RegimeError`) outside its validity region.

    Values are clamped to ``[0, 1]``.  ``vacuous`` marks values that carry no
    information: an upper bound of at least 1 or a lower bound that is 0.
    ``scale`` multiplies the raw value before clamping and exists only to
    exercise failure paths in tests.
    """
    spec = spec_id if isinstance(spec_id, TailBoundSpec) else get_spec(spec_id)
    alpha = float(alpha)
    y = float(y)
    why = spec.refusal(alpha, y, aux)
    if why is not None:
        raise RegimeError(f"{spec.id} does not apply at alpha={alpha}, y={y}: {why}")
    params = spec.aux(aux)
    raw = float(spec.value_fn(alpha, y, params)) * scale
    value = min(1.0, max(0.0, raw))
    vacuous = raw >= 1.0 if spec.direction == UPPER else value <= 0.0
    return BoundEvaluation(
        spec_id=spec.id,
        alpha=alpha,
        y=y,
        threshold=float(spec.threshold_map(alpha, y, params)),
        bound_value=value,
        raw_value=raw,
        regime=spec.regime,
        valid=True,
        vacuous=vacuous,
        side=spec.side,
        direction=spec.direction,
        variable=spec.variable,
    )


def evaluate_or_refuse(spec_id, alpha, y, aux=None, scale: float = 1.0) -> BoundEvaluation:
    """Like :func:`evaluate` but encodes a refusal as ``valid=False`` with NaN values."""
    spec = spec_id if isinstance(spec_id, TailBoundSpec) else get_spec(spec_id)
    try:
        return evaluate(spec, alpha, y, aux, scale)
    except RegimeError as exc:
        return BoundEvaluation(spec.id, float(alpha), float(y), math.nan, math.nan, math.nan, spec.regime,
                               False, False, spec.side, spec.direction, spec.variable, str(exc))
