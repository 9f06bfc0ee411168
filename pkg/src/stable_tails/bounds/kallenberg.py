"""Characteristic-function tail bound ``P(|Z| > y) <= (y/2) int_{-2/y}^{2/y} (1 - phi(t)) dt``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from ..core import check_alpha
from ..errors import DomainError, QuadratureError

__all__ = ["kallenberg_bound", "KallenbergChain", "kallenberg_chain"]


def kallenberg_bound(cf, y: float) -> float:
    """Numeric bound for any callable ``cf``; the real part of ``1 - cf`` is
    integrated (the imaginary part cancels over the symmetric interval).
    Clamped to ``[0, 1]``."""
    if not y > 0:
        raise DomainError(f"y must be positive, got {y}")
    y = float(y)
    h = 2.0 / y

    def g(t):
        return 1.0 - float(np.real(cf(t)))

    # substitute t = h s so the integration range is [0, 1]
    val, err = integrate.quad(lambda s: g(h * s) + g(-h * s), 0.0, 1.0, epsabs=1e-14, epsrel=1e-10, limit=200)
    if err > 1e-8 * max(abs(val), 1e-300) and err > 1e-14:
        raise QuadratureError(f"Kallenberg integral did not converge at y={y} (abserr={err:.3g})")
    return min(1.0, max(0.0, 0.5 * y * h * val))


@dataclass(frozen=True)
class KallenbergChain:
    """Successive closed-form majorants of ``P(|X| > y)`` for the symmetric
    law with Lévy density ``|x|^(-alpha-1)``, ``alpha < 1``.

    ``integral`` is ``2y int_0^{1/y} (1 - exp(-C s^alpha)) ds`` with
    ``C = 8/(alpha(2-alpha))``; ``linearized`` replaces ``1 - e^-u`` by
    ``u``; ``expanded`` and ``final`` are the two closing relaxations.
    """

    alpha: float
    y: float
    integral: float
    linearized: float
    expanded: float
    final: float

    def ordered(self) -> bool:
        return self.integral <= self.linearized <= self.expanded <= self.final


def kallenberg_chain(alpha: float, y: float) -> KallenbergChain:
    a = check_alpha(alpha, allow="low")
    if not y > 0:
        raise DomainError(f"y must be positive, got {y}")
    C = 8.0 / (a * (2.0 - a))
    # int_0^{1/y} -expm1(-C s^a) ds with s = u / y
    val, err = integrate.quad(lambda u: -math.expm1(-C * (u / y) ** a), 0.0, 1.0, epsabs=1e-15, epsrel=1e-12)
    return KallenbergChain(
        alpha=a,
        y=float(y),
        integral=2.0 * val,
        linearized=2.0 * C / ((1.0 + a) * y**a),
        expanded=16.0 / (a * (1.0 + a) * (2.0 - a) * y**a),
        final=8.0 / (a * y**a),
    )
