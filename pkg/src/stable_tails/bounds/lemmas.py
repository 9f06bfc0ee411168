"""Component-level bounds for the truncation split ``X = X_1 + X^1`` (``alpha in (1, 2)``).

``X^1`` is the compound-Poisson part (jumps of size above 1, minus the drift
``1/(alpha-1)`` in the asymmetric case); ``X_1`` is the small-jump part.
"""

from __future__ import annotations

import math

from ..core import ASYMMETRIC, SYMMETRIC, check_alpha
from ..errors import DomainError, RegimeError
from .specs import (
    LEFT,
    LOWER,
    RIGHT,
    UPPER,
    VAR_BIG,
    VAR_SMALL,
    BoundEvaluation,
    TailBoundSpec,
    evaluate_or_refuse,
    list_specs,
    register,
)
from .theorems import left_large_exponent

__all__ = ["lemma_bounds", "asym_jump_constant", "sym_jump_constant", "LEMMA_GROUPS"]

LEMMA_GROUPS = ("asym12.xupper", "asym12.xlower", "sym12.xupper", "sym12.xlower")


def _poisson_moment(rate: float, power: float) -> float:
    """``sum_{k>=1} e^(-rate) rate^k k^power / k!``."""
    total = 0.0
    k = 1
    while True:
        term = math.exp(-rate + k * math.log(rate) + power * math.log(k) - math.lgamma(k + 1.0))
        total += term
        if k > rate + 10 and term < 1e-17 * total:
            return total
        k += 1


def asym_jump_constant(alpha: float) -> float:
    """``e^(-1/alpha) sum_k k^(alpha+1) / (alpha^k k!)``."""
    a = check_alpha(alpha, allow="high")
    return _poisson_moment(1.0 / a, a + 1.0)


def sym_jump_constant(alpha: float) -> float:
    """``(1/2) sum_k e^(-2/alpha) (2/alpha)^k k^(alpha+1) / k!``."""
    a = check_alpha(alpha, allow="high")
    return 0.5 * _poisson_moment(2.0 / a, a + 1.0)


def _need(cond, text):
    return None if cond else text


def _b(a):
    return 1.0 / (a - 1.0)


def _y_ge_1(a, y, p):
    return _need(y >= 1.0, "requires y >= 1")


def _entry(a):
    return 2.0 / math.sqrt(2.0 - a)


# -- X^1, asymmetric ----------------------------------------------------------

register(TailBoundSpec(
    id="asym12.xupper.lower", law=ASYMMETRIC, variable=VAR_BIG, side=RIGHT, direction=LOWER, alpha_range="high",
    regime="lemma", validity=_y_ge_1,
    threshold_map=lambda a, y, p: y - _b(a),
    value_fn=lambda a, y, p: math.exp(-1.0 / a) / a * y**-a,
    description="P(X^1 >= y - b) >= e^(-1/a) / (a y^a)",
))

register(TailBoundSpec(
    id="asym12.xupper.lower_simple", law=ASYMMETRIC, variable=VAR_BIG, side=RIGHT, direction=LOWER, alpha_range="high",
    regime="lemma", validity=_y_ge_1,
    threshold_map=lambda a, y, p: y - _b(a),
    value_fn=lambda a, y, p: y**-a / (2.0 * math.sqrt(math.e)),
    description="P(X^1 >= y - b) >= 1 / (2 sqrt(e) y^a)",
))

register(TailBoundSpec(
    id="asym12.xupper.upper", law=ASYMMETRIC, variable=VAR_BIG, side=RIGHT, direction=UPPER, alpha_range="high",
    regime="lemma", validity=_y_ge_1,
    threshold_map=lambda a, y, p: y - _b(a),
    value_fn=lambda a, y, p: asym_jump_constant(a) * y**-a,
    description="P(X^1 >= y - b) <= e^(-1/a) sum_k k^(a+1)/(a^k k!) / y^a",
))

# The closing constant 2/e assumes sum_k k^2/k! = 2; that sum is 2e, and the
# compound-Poisson tail exceeds (2/e) y^-a on ordinary grids.
register(TailBoundSpec(
    id="asym12.xupper.upper_simple", law=ASYMMETRIC, variable=VAR_BIG, side=RIGHT, direction=UPPER, alpha_range="high",
    regime="lemma", validity=_y_ge_1,
    threshold_map=lambda a, y, p: y - _b(a),
    value_fn=lambda a, y, p: (2.0 / math.e) * y**-a,
    description="P(X^1 >= y - b) <= (2/e) / y^a  (known to fail)",
    known_invalid=True,
))

# -- X_1, asymmetric ----------------------------------------------------------

register(TailBoundSpec(
    id="asym12.xlower.right.upper", law=ASYMMETRIC, variable=VAR_SMALL, side=RIGHT, direction=UPPER, alpha_range="high",
    regime="lemma",
    validity=lambda a, y, p: _need(0.0 <= y <= 1.0 / (2.0 - a), "requires 0 <= y <= 1/(2-alpha)"),
    threshold_map=lambda a, y, p: y,
    value_fn=lambda a, y, p: math.exp(0.25 - 0.5 * (2.0 - a) * y * y),
    description="P(X_1 >= y) <= e^(1/4) exp(-(2-a) y^2 / 2)",
))

register(TailBoundSpec(
    id="asym12.xlower.left.upper", law=ASYMMETRIC, variable=VAR_SMALL, side=LEFT, direction=UPPER, alpha_range="high",
    regime="lemma",
    validity=lambda a, y, p: _need(0.0 <= y <= 2.0 / (2.0 - a), "requires 0 <= y <= 2/(2-alpha)"),
    threshold_map=lambda a, y, p: -y,
    value_fn=lambda a, y, p: math.exp(4.0 / 3.0 - 0.5 * (2.0 - a) * y * y),
    description="P(X_1 <= -y) <= e^(4/3) exp(-(2-a) y^2 / 2)",
))

register(TailBoundSpec(
    id="asym12.xlower.right.lower", law=ASYMMETRIC, variable=VAR_SMALL, side=RIGHT, direction=LOWER, alpha_range="high",
    regime="lemma",
    validity=lambda a, y, p: _need(_entry(a) <= y <= 1.0 / (2.0 - a), "requires 2/sqrt(2-alpha) <= y <= 1/(2-alpha)"),
    threshold_map=lambda a, y, p: 0.25 * y,
    value_fn=lambda a, y, p: 1e-2 * math.exp(-(2.0 - a) * y * y),
    description="P(X_1 >= y/4) >= 1e-2 exp(-(2-a) y^2)",
))

# The printed interval for this statement is [2/(2-a), 2/sqrt(2-a)], which is
# empty for alpha in (1, 2); the proof works on [2/sqrt(2-a), 2/(2-a)].
register(TailBoundSpec(
    id="asym12.xlower.left.lower", law=ASYMMETRIC, variable=VAR_SMALL, side=LEFT, direction=LOWER, alpha_range="high",
    regime="lemma",
    validity=lambda a, y, p: _need(_entry(a) <= y <= 2.0 / (2.0 - a), "requires 2/sqrt(2-alpha) <= y <= 2/(2-alpha)"),
    threshold_map=lambda a, y, p: -y / 24.0,
    value_fn=lambda a, y, p: 1e-2 * math.exp(-(2.0 - a) * y * y),
    description="P(X_1 <= -y/24) >= 1e-2 exp(-(2-a) y^2)",
))

register(TailBoundSpec(
    id="asym12.xlower.left.large.upper", law=ASYMMETRIC, variable=VAR_SMALL, side=LEFT, direction=UPPER,
    alpha_range="high", regime="lemma",
    validity=lambda a, y, p: _need(y >= 2.0 / (2.0 - a), "requires y >= 2/(2-alpha)"),
    threshold_map=lambda a, y, p: -y,
    value_fn=lambda a, y, p: math.exp(-left_large_exponent(a, 0.5 * (y + _b(a)))),
    description="P(X_1 <= -y) <= exp(-((y + b)/2)^(a/(a-1)) / A^(1/(a-1)))",
))

register(TailBoundSpec(
    id="asym12.xlower.left.large.lower", law=ASYMMETRIC, variable=VAR_SMALL, side=LEFT, direction=LOWER,
    alpha_range="high", regime="lemma",
    validity=lambda a, y, p: _need(y >= 2.0 / (2.0 - a), "requires y >= 2/(2-alpha)"),
    threshold_map=lambda a, y, p: -(1.0 / math.e - 0.25) * y,
    value_fn=lambda a, y, p: (1.0 - 1.0 / math.sqrt(math.e)) ** 2
    * math.exp(-left_large_exponent(a, math.sqrt(4.0 - 2.0 / math.e) * (y + _b(a)))),
    description="P(X_1 <= -(1/e - 1/4) y) >= (1 - e^-1/2)^2 exp(-(sqrt(4 - 2/e)(y + b))^(a/(a-1)) / A^(1/(a-1)))",
))

# -- X^1, symmetric -----------------------------------------------------------

# Holds for y >= 1.5 on tested grids but not at y = 1: the single-jump term
# is (1/a) e^(-2/a) y^-a, half of what the closing step uses.
register(TailBoundSpec(
    id="sym12.xupper.lower", law=SYMMETRIC, variable=VAR_BIG, side=RIGHT, direction=LOWER, alpha_range="high",
    regime="lemma", validity=_y_ge_1,
    threshold_map=lambda a, y, p: y,
    value_fn=lambda a, y, p: y**-a / math.e,
    description="P(X^1 >= y) >= 1 / (e y^a)  (fails near y = 1)",
    known_invalid=True,
))

register(TailBoundSpec(
    id="sym12.xupper.upper", law=SYMMETRIC, variable=VAR_BIG, side=RIGHT, direction=UPPER, alpha_range="high",
    regime="lemma", validity=_y_ge_1,
    threshold_map=lambda a, y, p: y,
    value_fn=lambda a, y, p: sym_jump_constant(a) * y**-a,
    description="P(X^1 >= y) <= (1/2) sum_k e^(-2/a) (2/a)^k k^(a+1) / k! / y^a",
))

register(TailBoundSpec(
    id="sym12.xupper.upper_simple", law=SYMMETRIC, variable=VAR_BIG, side=RIGHT, direction=UPPER, alpha_range="high",
    regime="lemma", validity=_y_ge_1,
    threshold_map=lambda a, y, p: y,
    value_fn=lambda a, y, p: (10.0 / 3.0) * y**-a,
    description="P(X^1 >= y) <= (10/3) / y^a",
))

# -- X_1, symmetric -----------------------------------------------------------

register(TailBoundSpec(
    id="sym12.xlower.upper", law=SYMMETRIC, variable=VAR_SMALL, side=RIGHT, direction=UPPER, alpha_range="high",
    regime="lemma",
    validity=lambda a, y, p: _need(0.0 <= y <= 2.0 / (2.0 - a), "requires 0 <= y <= 2/(2-alpha)"),
    threshold_map=lambda a, y, p: y,
    value_fn=lambda a, y, p: math.exp(2.0 / 45.0 - 0.25 * (2.0 - a) * y * y),
    description="P(X_1 >= y) <= e^(2/45) exp(-(2-a) y^2 / 4)",
))

register(TailBoundSpec(
    id="sym12.xlower.lower", law=SYMMETRIC, variable=VAR_SMALL, side=RIGHT, direction=LOWER, alpha_range="high",
    regime="lemma",
    validity=lambda a, y, p: _need(_entry(a) <= y <= 2.0 / (2.0 - a), "requires 2/sqrt(2-alpha) <= y <= 2/(2-alpha)"),
    threshold_map=lambda a, y, p: math.sqrt(2.0) / 4.0 * y,
    value_fn=lambda a, y, p: math.exp(-(2.0 - a) * y * y) / 3.0,
    description="P(X_1 >= (sqrt(2)/4) y) >= (1/3) exp(-(2-a) y^2)",
))


def lemma_bounds(alpha: float, y: float, which: str) -> list[BoundEvaluation]:
    """Every bound in lemma group ``which`` (see :data:`LEMMA_GROUPS`) that applies at ``y``."""
    if which not in LEMMA_GROUPS:
        raise DomainError(f"unknown lemma group {which!r}; expected one of {LEMMA_GROUPS}")
    a = check_alpha(alpha, allow="high")
    out = [evaluate_or_refuse(s, a, y) for s in list_specs(which + ".")]
    good = [e for e in out if e.valid]
    if not good:
        reasons = "; ".join(sorted({e.message.split(": ", 1)[-1] for e in out}))
        raise RegimeError(f"no {which} bound applies at alpha={a}, y={y}: {reasons}")
    return good
