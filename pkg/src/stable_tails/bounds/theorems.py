"""Tail bounds on the stable variable ``X`` itself.

Laws are normalized as in :class:`stable_tails.core.LevyCanonical`: unit
Lévy density ``x^(-alpha-1)`` on each charged half-line.  Throughout
``delta = 2 - alpha`` and ``b = 1/(alpha - 1)`` (the drift of the big-jump
part in the asymmetric ``alpha > 1`` case).
"""

from __future__ import annotations

import math

from ..core import ASYMMETRIC, SYMMETRIC, check_alpha
from ..errors import RegimeError
from .specs import (
    LEFT,
    LOWER,
    RIGHT,
    UPPER,
    VAR_X,
    BoundEvaluation,
    TailBoundSpec,
    evaluate,
    evaluate_or_refuse,
    register,
)

__all__ = [
    "asym01_upper",
    "asym01_lower",
    "sym_bounds_01",
    "asym12_right",
    "asym12_left",
    "sym12",
    "left_large_exponent",
    "ASYM12_RIGHT_IDS",
    "ASYM12_LEFT_IDS",
    "SYM12_IDS",
]

SQRT_E = math.sqrt(math.e)


def _b(a):
    return 1.0 / (a - 1.0)


def _need(cond: bool, text: str):
    return None if cond else text


def _entry(a):
    return 2.0 / math.sqrt(2.0 - a)


def left_large_exponent(alpha: float, z: float) -> float:
    """``z^(alpha/(alpha-1)) / A^(1/(alpha-1))`` with ``A = 1/(2-alpha) + 1/(alpha-1)``.

    The far-left bounds are ``exp(-left_large_exponent(alpha, c (y + b)))``
    for the displayed constants ``c``.
    """
    a = float(alpha)
    if z <= 0.0:
        return 0.0
    A = 1.0 / (2.0 - a) + _b(a)
    # log form: the power overflows as alpha -> 1
    log_val = (a / (a - 1.0)) * math.log(z) - _b(a) * math.log(A)
    return math.exp(log_val) if log_val < 700.0 else math.inf


# -- asymmetric, alpha in (0, 1) ---------------------------------------------

register(TailBoundSpec(
    id="asym01.upper", law=ASYMMETRIC, variable=VAR_X, side=RIGHT, direction=UPPER, alpha_range="low",
    regime="asym01",
    validity=lambda a, y, p: _need(y >= (1.0 / a) ** (1.0 / a), "requires y >= (1/alpha)^(1/alpha)"),
    threshold_map=lambda a, y, p: 1.0 / (1.0 - a) + 3.0 * y,
    value_fn=lambda a, y, p: 2.0 / (a * y**a),
    description="P(X > 1/(1-a) + 3y) <= 2/(a y^a)",
))

register(TailBoundSpec(
    id="asym01.lower", law=ASYMMETRIC, variable=VAR_X, side=RIGHT, direction=LOWER, alpha_range="low",
    regime="asym01",
    validity=lambda a, y, p: _need(y >= 1.0, "requires y >= 1") or _need(0.0 < p["theta"] < 1.0, "requires theta in (0, 1)"),
    threshold_map=lambda a, y, p: p["theta"] / (1.0 - a) + y,
    value_fn=lambda a, y, p: (2.0 / 3.0) * (1.0 - p["theta"]) ** 2 / (1.0 + a * y**a),
    description="P(X >= theta/(1-a) + y) >= (2/3)(1-theta)^2 / (1 + a y^a)",
    aux_params={"theta": 0.5},
))

# -- symmetric, alpha in (0, 1) ----------------------------------------------

register(TailBoundSpec(
    id="sym01.upper", law=SYMMETRIC, variable=VAR_X, side=RIGHT, direction=UPPER, alpha_range="low",
    regime="sym01",
    validity=lambda a, y, p: _need(y > 0.0, "requires y > 0"),
    threshold_map=lambda a, y, p: y,
    value_fn=lambda a, y, p: 4.0 / (a * y**a),
    description="P(X >= y) <= 4/(a y^a)",
))

register(TailBoundSpec(
    id="sym01.lower", law=SYMMETRIC, variable=VAR_X, side=RIGHT, direction=LOWER, alpha_range="low",
    regime="sym01",
    validity=lambda a, y, p: _need(y > 0.0, "requires y > 0"),
    threshold_map=lambda a, y, p: y,
    value_fn=lambda a, y, p: 0.5 / (2.0 + a * y**a),
    description="P(X >= y) >= (1/2) / (2 + a y^a)",
))

# -- asymmetric, alpha in (1, 2), right tail ---------------------------------


def _right_mid(a, y, p):
    d = 2.0 - a
    return _need(_entry(a) <= y <= 1.0 / d, "requires 2/sqrt(2-alpha) <= y <= 1/(2-alpha)")


def _right_big(a, y, p):
    d = 2.0 - a
    return _need(y >= max(1.0 / d, _entry(a)), "requires y >= max(1/(2-alpha), 2/sqrt(2-alpha))")


register(TailBoundSpec(
    id="asym12.right.mid.upper", law=ASYMMETRIC, variable=VAR_X, side=RIGHT, direction=UPPER, alpha_range="high",
    regime="mid", validity=_right_mid,
    threshold_map=lambda a, y, p: 2.0 * y - _b(a),
    value_fn=lambda a, y, p: (2.0 / math.e) * y**-a + math.exp(0.25 - 0.5 * (2.0 - a) * y * y),
    description="P(X >= 2y - b) <= (2/e) y^-a + e^(1/4) exp(-(2-a) y^2 / 2)",
))

register(TailBoundSpec(
    id="asym12.right.mid.lower", law=ASYMMETRIC, variable=VAR_X, side=RIGHT, direction=LOWER, alpha_range="high",
    regime="mid", validity=_right_mid,
    threshold_map=lambda a, y, p: 0.25 * y - _b(a),
    value_fn=lambda a, y, p: (y**-a / math.e + math.exp(-(2.0 - a) * y * y)) / (400.0 * SQRT_E),
    description="P(X >= y/4 - b) >= (e^-1 y^-a + exp(-(2-a) y^2)) / (400 sqrt(e))",
))

register(TailBoundSpec(
    id="asym12.right.big.upper", law=ASYMMETRIC, variable=VAR_X, side=RIGHT, direction=UPPER, alpha_range="high",
    regime="big", validity=_right_big,
    threshold_map=lambda a, y, p: 2.0 * y - _b(a),
    value_fn=lambda a, y, p: 8.0 * y**-a,
    description="P(X >= 2y - b) <= 8 / y^a",
))

register(TailBoundSpec(
    id="asym12.right.big.lower", law=ASYMMETRIC, variable=VAR_X, side=RIGHT, direction=LOWER, alpha_range="high",
    regime="big", validity=_right_big,
    threshold_map=lambda a, y, p: y - _b(a),
    value_fn=lambda a, y, p: 1e-3 * y**-a,
    description="P(X >= y - b) >= 1e-3 / y^a",
))

# -- asymmetric, alpha in (1, 2), left tail ----------------------------------


def _left_mid(a, y, p):
    return _need(_entry(a) <= y <= 2.0 / (2.0 - a), "requires 2/sqrt(2-alpha) <= y <= 2/(2-alpha)")


def _left_large(a, y, p):
    return _need(y >= 2.0 / (2.0 - a), "requires y >= 2/(2-alpha)")


register(TailBoundSpec(
    id="asym12.left.mid.upper", law=ASYMMETRIC, variable=VAR_X, side=LEFT, direction=UPPER, alpha_range="high",
    regime="mid", validity=_left_mid,
    threshold_map=lambda a, y, p: -y - _b(a),
    value_fn=lambda a, y, p: math.exp(4.0 / 3.0 - 0.5 * (2.0 - a) * y * y),
    description="P(X <= -y - b) <= e^(4/3) exp(-(2-a) y^2 / 2)",
))

register(TailBoundSpec(
    id="asym12.left.mid.lower", law=ASYMMETRIC, variable=VAR_X, side=LEFT, direction=LOWER, alpha_range="high",
    regime="mid", validity=_left_mid,
    threshold_map=lambda a, y, p: -y / 24.0 - _b(a),
    value_fn=lambda a, y, p: 1e-2 * math.exp(-1.0 - (2.0 - a) * y * y),
    description="P(X <= -y/24 - b) >= e^-1 1e-2 exp(-(2-a) y^2)",
))

register(TailBoundSpec(
    id="asym12.left.large.upper", law=ASYMMETRIC, variable=VAR_X, side=LEFT, direction=UPPER, alpha_range="high",
    regime="large", validity=_left_large,
    threshold_map=lambda a, y, p: -y - _b(a),
    value_fn=lambda a, y, p: math.exp(-left_large_exponent(a, 0.5 * (y + _b(a)))),
    description="P(X <= -y - b) <= exp(-((y + b)/2)^(a/(a-1)) / A^(1/(a-1)))",
))

register(TailBoundSpec(
    id="asym12.left.large.lower", law=ASYMMETRIC, variable=VAR_X, side=LEFT, direction=LOWER, alpha_range="high",
    regime="large", validity=_left_large,
    threshold_map=lambda a, y, p: -(1.0 / math.e - 0.25) * y - _b(a),
    value_fn=lambda a, y, p: math.exp(-1.0 - left_large_exponent(a, math.sqrt(4.0 - 2.0 / math.e) * (y + _b(a)))),
    description="P(X <= -(1/e - 1/4) y - b) >= e^-1 exp(-(sqrt(4 - 2/e)(y + b))^(a/(a-1)) / A^(1/(a-1)))",
))

# -- symmetric, alpha in (1, 2) ----------------------------------------------


def _sym_mid(a, y, p):
    return _need(_entry(a) <= y <= 2.0 / (2.0 - a), "requires 2/sqrt(2-alpha) <= y <= 2/(2-alpha)")


register(TailBoundSpec(
    id="sym12.mid.upper", law=SYMMETRIC, variable=VAR_X, side=RIGHT, direction=UPPER, alpha_range="high",
    regime="mid", validity=_sym_mid,
    threshold_map=lambda a, y, p: 2.0 * y,
    value_fn=lambda a, y, p: (10.0 / 3.0) * y**-a + math.exp(2.0 / 45.0 - 0.25 * (2.0 - a) * y * y),
    description="P(X >= 2y) <= (10/3) y^-a + e^(2/45) exp(-(2-a) y^2 / 4)",
))

register(TailBoundSpec(
    id="sym12.mid.lower", law=SYMMETRIC, variable=VAR_X, side=RIGHT, direction=LOWER, alpha_range="high",
    regime="mid", validity=_sym_mid,
    threshold_map=lambda a, y, p: math.sqrt(2.0) / 4.0 * y,
    value_fn=lambda a, y, p: y**-a / (6.0 * math.exp(5.0)) + math.exp(-(2.0 - a) * y * y) / (6.0 * math.e),
    description="P(X >= (sqrt(2)/4) y) >= y^-a / (6 e^5) + exp(-(2-a) y^2) / (6e)",
))

register(TailBoundSpec(
    id="sym12.large.upper", law=SYMMETRIC, variable=VAR_X, side=RIGHT, direction=UPPER, alpha_range="high",
    regime="large", validity=_left_large,
    threshold_map=lambda a, y, p: 2.0 * y,
    value_fn=lambda a, y, p: 16.0 / (3.0 * y**a),
    description="P(X >= 2y) <= 16 / (3 y^a)",
))

register(TailBoundSpec(
    id="sym12.large.lower", law=SYMMETRIC, variable=VAR_X, side=RIGHT, direction=LOWER, alpha_range="high",
    regime="large", validity=_left_large,
    threshold_map=lambda a, y, p: y,
    value_fn=lambda a, y, p: 0.5 / (2.0 + a * y**a),
    description="P(X >= y) >= (1/2) / (2 + a y^a)",
))

ASYM12_RIGHT_IDS = ("asym12.right.mid.upper", "asym12.right.mid.lower", "asym12.right.big.upper", "asym12.right.big.lower")
ASYM12_LEFT_IDS = ("asym12.left.mid.upper", "asym12.left.mid.lower", "asym12.left.large.upper", "asym12.left.large.lower")
SYM12_IDS = ("sym12.mid.upper", "sym12.mid.lower", "sym12.large.upper", "sym12.large.lower")


# -- public operations --------------------------------------------------------


def asym01_upper(alpha: float, y: float) -> BoundEvaluation:
    return evaluate("asym01.upper", alpha, y)


def asym01_lower(alpha: float, y: float, theta: float = 0.5) -> BoundEvaluation:
    return evaluate("asym01.lower", alpha, y, {"theta": theta})


def sym_bounds_01(alpha: float, y: float) -> tuple[BoundEvaluation, BoundEvaluation]:
    """``(upper, lower)`` on ``P(X >= y)`` for the symmetric law, ``alpha < 1``."""
    return evaluate("sym01.upper", alpha, y), evaluate("sym01.lower", alpha, y)


def _applicable(ids, alpha, y, floor_text) -> list[BoundEvaluation]:
    a = check_alpha(alpha, allow="high")
    out = [evaluate_or_refuse(i, a, y) for i in ids]
    good = [e for e in out if e.valid]
    if not good:
        raise RegimeError(f"no bound applies at alpha={a}, y={y}: {floor_text}")
    return good


def asym12_right(alpha: float, y: float) -> list[BoundEvaluation]:
    """Every right-tail bound applicable at ``y``; at ``y = 1/(2-alpha)`` both
    regimes are returned."""
    return _applicable(ASYM12_RIGHT_IDS, alpha, y, "requires y >= 2/sqrt(2-alpha)")


def asym12_left(alpha: float, y: float) -> list[BoundEvaluation]:
    return _applicable(ASYM12_LEFT_IDS, alpha, y, "requires y >= 2/sqrt(2-alpha)")


def sym12(alpha: float, y: float) -> list[BoundEvaluation]:
    return _applicable(SYM12_IDS, alpha, y, "requires y >= 2/sqrt(2-alpha) (mid) or y >= 2/(2-alpha) (large)")
