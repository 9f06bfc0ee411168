"""Exponential tilts behind the small-jump tail bounds (``alpha in (1, 2)``).

A Chernoff bound at tilt ``t`` gives the upper estimates; the lower ones apply
Paley-Zygmund to ``exp(t X_1)`` at level ``lambda_pz``.  The tilt points and
levels are fixed by the derivations, so they are exposed read-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..core import check_alpha
from ..errors import DomainError, RegimeError

__all__ = ["ExponentialTilt", "tilt_exponent_A", "t_y", "t_tilde_y", "t_y_residual"]


def tilt_exponent_A(alpha: float) -> float:
    """``A = 1/(2-alpha) + 1/(alpha-1)``."""
    a = check_alpha(alpha, allow="high")
    return 1.0 / (2.0 - a) + 1.0 / (a - 1.0)


def _left_large_guard(a, y):
    if not y >= 2.0 / (2.0 - a):
        raise RegimeError(f"the far-left tilt needs y >= 2/(2-alpha) = {2.0 / (2.0 - a)}, got y={y}")


def t_y(alpha: float, y: float) -> float:
    """Negative root of ``alpha A |t|^(alpha-1) = y + 1/(alpha-1)``."""
    a = check_alpha(alpha, allow="high")
    _left_large_guard(a, y)
    return -(((y + 1.0 / (a - 1.0)) / (a * tilt_exponent_A(a))) ** (1.0 / (a - 1.0)))


def t_tilde_y(alpha: float, y: float) -> float:
    """Negative root of ``A |t|^(alpha-1) = y + 1/(alpha-1)``."""
    a = check_alpha(alpha, allow="high")
    _left_large_guard(a, y)
    return -(((y + 1.0 / (a - 1.0)) / tilt_exponent_A(a)) ** (1.0 / (a - 1.0)))


def t_y_residual(alpha: float, y: float, t: float) -> float:
    """Relative residual of the defining equation of :func:`t_y` at ``t``."""
    a = float(alpha)
    rhs = y + 1.0 / (a - 1.0)
    return abs(a * tilt_exponent_A(a) * abs(t) ** (a - 1.0) - rhs) / rhs


@dataclass(frozen=True)
class ExponentialTilt:
    """Tilt point ``t`` and Paley-Zygmund level ``lambda_pz`` for one bound."""

    t: float
    lambda_pz: float
    regime: str
    alpha: float
    y: float

    def __post_init__(self):
        if not 0.0 < self.lambda_pz < 1.0:
            raise DomainError(f"lambda_pz must lie in (0, 1), got {self.lambda_pz}")

    @classmethod
    def asym_right(cls, alpha: float, y: float) -> "ExponentialTilt":
        a = check_alpha(alpha, allow="high")
        return cls((2.0 - a) * y, 1.0 / math.e, "asym-right", a, float(y))

    @classmethod
    def asym_left_mid(cls, alpha: float, y: float) -> "ExponentialTilt":
        a = check_alpha(alpha, allow="high")
        return cls(-(2.0 - a) * y, 1.0 / math.sqrt(math.e), "asym-left-mid", a, float(y))

    @classmethod
    def asym_left_large(cls, alpha: float, y: float) -> "ExponentialTilt":
        """Chernoff tilt ``t_y``; the matching lower bound uses :meth:`asym_left_large_pz`."""
        return cls(t_y(alpha, y), 1.0 / math.sqrt(math.e), "asym-left-large", float(alpha), float(y))

    @classmethod
    def asym_left_large_pz(cls, alpha: float, y: float) -> "ExponentialTilt":
        return cls(t_tilde_y(alpha, y), 1.0 / math.sqrt(math.e), "asym-left-large-pz", float(alpha), float(y))

    @classmethod
    def symmetric(cls, alpha: float, y: float) -> "ExponentialTilt":
        a = check_alpha(alpha, allow="high")
        return cls((2.0 - a) * y / math.sqrt(2.0), 1.0 / math.e, "symmetric", a, float(y))

    @property
    def pz_factor(self) -> float:
        """``(1 - lambda)^2``."""
        return (1.0 - self.lambda_pz) ** 2
