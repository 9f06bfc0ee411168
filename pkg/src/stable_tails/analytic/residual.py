"""Moments and moment generating function of the residual series ``S(x)``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from ..core import check_alpha
from ..errors import DomainError, QuadratureError

__all__ = ["ResidualSummary", "residual_summary", "residual_exponent", "mgf_S"]


def residual_exponent(alpha: float, x: float, lam: float) -> float:
    """``f(lam, x) = int_0^inf 1 - exp(alpha^(-1/alpha) lam (x+y)^(-1/alpha)) dy`` for ``lam <= 0``.

    With ``v = (x+y)^(-1/alpha)`` the integral becomes
    ``alpha int_0^{x^(-1/alpha)} -expm1(a lam v) v^(-alpha-1) dv``; the
    integrand behaves like ``v^(-alpha)`` at zero and is integrated with an
    algebraic weight.
    """
    alpha = check_alpha(alpha, allow="low")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    if lam > 0:
        raise DomainError(f"the exponent is only defined for lambda <= 0, got {lam}")
    if lam == 0:
        return 0.0
    a = alpha ** (-1.0 / alpha)
    upper = x ** (-1.0 / alpha)

    def g(v):
        if v == 0.0:
            return -alpha * a * lam
        return -alpha * math.expm1(a * lam * v) / v

    val, err = integrate.quad(g, 0.0, upper, weight="alg", wvar=(-alpha, 0.0), epsabs=1e-13, epsrel=1e-12, limit=200)
    if err > 1e-8 * max(1.0, abs(val)):
        raise QuadratureError(f"residual exponent quadrature error {err:.3g} for alpha={alpha}, x={x}, lambda={lam}")
    return val


def mgf_S(alpha: float, x: float, lam: float) -> float:
    """``E exp(lam S(x)) = exp(-f(lam, x))``, ``lam <= 0``."""
    return math.exp(-residual_exponent(alpha, x, lam))


@dataclass(frozen=True)
class ResidualSummary:
    alpha: float
    x: float
    mean: float
    variance: float

    def exponent(self, lam):
        lam_arr = np.asarray(lam, dtype=float)
        if lam_arr.ndim == 0:
            return residual_exponent(self.alpha, self.x, float(lam_arr))
        return np.array([residual_exponent(self.alpha, self.x, float(v)) for v in lam_arr])

    def mgf(self, lam):
        return np.exp(-self.exponent(lam))


def residual_summary(alpha: float, x: float) -> ResidualSummary:
    """Closed-form mean ``(alpha x)^(1-1/alpha)/(1-alpha)`` and variance
    ``(alpha x)^(1-2/alpha)/(2-alpha)`` of ``S(x)``."""
    alpha = check_alpha(alpha, allow="low")
    if not x > 0:
        raise DomainError(f"x must be positive, got {x}")
    ax = alpha * x
    return ResidualSummary(
        alpha=alpha,
        x=float(x),
        mean=ax ** (1.0 - 1.0 / alpha) / (1.0 - alpha),
        variance=ax ** (1.0 - 2.0 / alpha) / (2.0 - alpha),
    )
