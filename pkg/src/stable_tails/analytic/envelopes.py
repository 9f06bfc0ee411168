"""Exponential-moment envelopes for the small-jump part ``X_1`` (``alpha in (1, 2)``).

``x1_laplace_exponent`` evaluates the exact ``log E exp(t X_1)`` by
quadrature; the envelopes are the closed-form lower/upper bounds used to
derive the tail estimates by exponential tilting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from ..core import check_alpha
from ..errors import DomainError, QuadratureError

__all__ = [
    "LaplaceEnvelope",
    "laplace_envelope",
    "x1_laplace_exponent",
    "symmetric_correction",
    "REGIMES",
    "ASYM_RIGHT",
    "ASYM_LEFT_SMALL",
    "ASYM_LEFT_LARGE",
    "SYMMETRIC_REGIME",
]

ASYM_RIGHT = "asym-right"
ASYM_LEFT_SMALL = "asym-left-small-t"
ASYM_LEFT_LARGE = "asym-left-large-t"
SYMMETRIC_REGIME = "symmetric"
REGIMES = (ASYM_RIGHT, ASYM_LEFT_SMALL, ASYM_LEFT_LARGE, SYMMETRIC_REGIME)


def _expm1m_over_x2(x, t):
    # (e^{tx} - 1 - tx) / x^2
    u = t * x
    if abs(u) < 1e-3:
        return t * t * (0.5 + u / 6.0 + u * u / 24.0)
    return (math.expm1(u) - u) / (x * x)


def _coshm1_over_x2(x, t):
    s = math.sinh(0.5 * t * x)
    return 2.0 * s * s / (x * x) if x > 0 else 0.5 * t * t


def x1_laplace_exponent(alpha: float, t: float, symmetric: bool = False) -> float:
    """``log E exp(t X_1)``: ``int_0^1 (e^{tx}-1-tx) x^(-alpha-1) dx``, or
    ``int_{-1}^{1} (e^{tx}-1) |x|^(-alpha-1) dx`` in the symmetric case."""
    alpha = check_alpha(alpha, allow="high")
    t = float(t)
    if t == 0.0:
        return 0.0
    g = (lambda x: 2.0 * _coshm1_over_x2(x, t)) if symmetric else (lambda x: _expm1m_over_x2(x, t))
    val, err = integrate.quad(g, 0.0, 1.0, weight="alg", wvar=(1.0 - alpha, 0.0), epsabs=1e-14, epsrel=1e-13, limit=200)
    if err > 1e-10 * max(1.0, abs(val)):
        raise QuadratureError(f"Laplace exponent quadrature error {err:.3g} at alpha={alpha}, t={t}")
    return val


def symmetric_correction(t):
    """``C(t) = t^4 (14/15 + cosh(t)/15) / 24``, the log ratio of the symmetric envelopes."""
    t = np.asarray(t, dtype=float)
    return t**4 * (14.0 / 15.0 + np.cosh(t) / 15.0) / 24.0


@dataclass(frozen=True)
class LaplaceEnvelope:
    """Lower and upper bounds on ``E exp(t X_1)`` over a ``t``-domain.

    The bounds are stored as log-moment functions; ``log_*`` methods avoid
    overflow for large ``|t|``.
    """

    alpha: float
    regime: str
    t_min: float
    t_max: float
    _log_lower: Callable
    _log_upper: Callable

    def _check(self, t):
        t = np.asarray(t, dtype=float)
        if np.any(t < self.t_min) or np.any(t > self.t_max) or np.any(~np.isfinite(t)):
            raise DomainError(f"{self.regime} envelope is defined for t in [{self.t_min}, {self.t_max}], got {t}")
        return t

    def contains(self, t) -> bool:
        t = np.asarray(t, dtype=float)
        return bool(np.all((t >= self.t_min) & (t <= self.t_max)))

    def log_lower(self, t):
        return self._log_lower(self._check(t))

    def log_upper(self, t):
        return self._log_upper(self._check(t))

    def log_exact(self, t):
        t = self._check(t)
        sym = self.regime == SYMMETRIC_REGIME
        f = np.vectorize(lambda s: x1_laplace_exponent(self.alpha, s, sym), otypes=[float])
        out = f(t)
        return out if out.ndim else float(out)

    def lower(self, t):
        return np.exp(self.log_lower(t))

    def upper(self, t):
        return np.exp(self.log_upper(t))

    def exact(self, t):
        return np.exp(self.log_exact(t))


def laplace_envelope(alpha: float, regime: str) -> LaplaceEnvelope:
    """Envelope for one ``regime`` in :data:`REGIMES`.

    * ``asym-right``, ``t >= 0``: lower ``exp(t^2/(2(2-a)))``, upper adds
      ``(t^3/8 + t^3 e^t/24)/(3-a)``.
    * ``asym-left-small-t``, ``-1 <= t <= 0``: lower subtracts ``|t|^3/6``,
      upper adds ``|t|^3/(6(3-a))``.
    * ``asym-left-large-t``, ``t <= -1``: with ``A = 1/(2-a) + 1/(a-1)``,
      upper ``exp(A|t|^a - |t|/(a-1))`` and lower the same exponent times ``1/e``.
    * ``symmetric``, all ``t``: lower ``exp(t^2/(2-a))``, upper ``exp(C(t))`` times the lower.
    """
    a = check_alpha(alpha, allow="high")
    d = 2.0 - a
    if regime == ASYM_RIGHT:
        lo = lambda t: 0.5 * t * t / d
        up = lambda t: 0.5 * t * t / d + (t**3 / 8.0 + t**3 * np.exp(t) / 24.0) / (3.0 - a)
        return LaplaceEnvelope(a, regime, 0.0, math.inf, lo, up)
    if regime == ASYM_LEFT_SMALL:
        lo = lambda t: 0.5 * t * t / d - np.abs(t) ** 3 / 6.0
        up = lambda t: 0.5 * t * t / d + np.abs(t) ** 3 / (6.0 * (3.0 - a))
        return LaplaceEnvelope(a, regime, -1.0, 0.0, lo, up)
    if regime == ASYM_LEFT_LARGE:
        A = 1.0 / d + 1.0 / (a - 1.0)
        expo = lambda t: A * np.abs(t) ** a - np.abs(t) / (a - 1.0)
        return LaplaceEnvelope(a, regime, -math.inf, -1.0, lambda t: expo(t) / math.e, expo)
    if regime == SYMMETRIC_REGIME:
        lo = lambda t: t * t / d
        up = lambda t: symmetric_correction(t) + t * t / d
        return LaplaceEnvelope(a, regime, -math.inf, math.inf, lo, up)
    raise DomainError(f"unknown envelope regime {regime!r}; expected one of {REGIMES}")
