"""Parametrizations of strictly stable laws and their asymptotic constants.

Two descriptions of the same law are used throughout:

* :class:`LevyCanonical` -- the Lévy-measure weights ``c1`` (right) and
  ``c2`` (left) in ``nu(dx) = c1 x^{-alpha-1} dx`` on ``(0, inf)`` plus
  ``c2 |x|^{-alpha-1} dx`` on ``(-inf, 0)``.  Every tail bound in
  :mod:`stable_tails.bounds` is stated in this normalization, with
  ``c1 = c2 = 1`` for the symmetric law and ``c1 = 1, c2 = 0`` for the
  totally asymmetric one.
* :class:`StableParams` -- the usual ``(alpha, beta, sigma, mu)`` form with
  characteristic function
  ``exp(-sigma^alpha |t|^alpha (1 - i beta sign(t) tan(pi alpha / 2)))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError

__all__ = [
    "LevyCanonical",
    "StableParams",
    "AsymptoticConstants",
    "check_alpha",
    "gamma_neg",
    "levy_scale_factor",
    "from_levy",
    "to_levy",
    "constants",
    "c_alpha",
    "c_alpha_regime",
    "SYMMETRIC",
    "ASYMMETRIC",
]


def check_alpha(alpha: float, *, allow: str = "both") -> float:
    """Validate a stability index.

    ``allow`` is ``"both"`` for ``(0,1) U (1,2)``, ``"low"`` for ``(0,1)``
    and ``"high"`` for ``(1,2)``.
    """
    alpha = float(alpha)
    if not math.isfinite(alpha) or not 0.0 < alpha < 2.0:
        raise DomainError(f"alpha must lie in (0, 2), got {alpha!r}")
    if alpha == 1.0:
        raise DomainError("alpha = 1 is excluded: the Cauchy case has a different characteristic exponent")
    if allow == "low" and alpha > 1.0:
        raise DomainError(f"alpha must lie in (0, 1) here, got {alpha!r}")
    if allow == "high" and alpha < 1.0:
        raise DomainError(f"alpha must lie in (1, 2) here, got {alpha!r}")
    return alpha


def gamma_neg(alpha: float) -> float:
    """Gamma(-alpha) for alpha in (0,1) U (1,2).

    Built from ``lgamma`` of a positive argument in ``(0, 1)`` followed by
    the downward recurrence ``Gamma(z) = Gamma(z + 1) / z``, so no pole is
    ever evaluated directly.  Relative accuracy is at the 1e-13 level.
    """
    alpha = check_alpha(alpha)
    if alpha < 1.0:
        # Gamma(-a) = Gamma(1 - a) / (-a)
        return -math.exp(math.lgamma(1.0 - alpha)) / alpha
    # Gamma(-a) = Gamma(2 - a) / ((-a)(1 - a)), positive for a in (1, 2)
    return math.exp(math.lgamma(2.0 - alpha)) / (alpha * (alpha - 1.0))


def levy_scale_factor(alpha: float) -> float:
    """``Gamma(-alpha) cos((2 - alpha) pi / 2)``; always positive.

    For ``alpha < 1`` both factors are negative, for ``alpha > 1`` both are
    positive.  ``sigma^alpha`` equals this factor times ``c1 + c2``.
    """
    return gamma_neg(alpha) * math.cos((2.0 - alpha) * math.pi / 2.0)


@dataclass(frozen=True)
class LevyCanonical:
    """Lévy-measure description of a strictly stable law."""

    alpha: float
    c1: float = 1.0
    c2: float = 1.0

    def __post_init__(self):
        check_alpha(self.alpha)
        if self.c1 < 0 or self.c2 < 0 or not (self.c1 + self.c2 > 0):
            raise DomainError(f"need c1, c2 >= 0 and c1 + c2 > 0, got c1={self.c1}, c2={self.c2}")

    @classmethod
    def symmetric(cls, alpha: float) -> "LevyCanonical":
        return cls(alpha, 1.0, 1.0)

    @classmethod
    def asymmetric(cls, alpha: float) -> "LevyCanonical":
        return cls(alpha, 1.0, 0.0)

    @property
    def is_symmetric(self) -> bool:
        return self.c1 == self.c2

    @property
    def is_totally_asymmetric(self) -> bool:
        return self.c2 == 0.0


# the two normalizations every theorem is stated in
SYMMETRIC = "symmetric"
ASYMMETRIC = "asymmetric"


@dataclass(frozen=True)
class StableParams:
    """``(alpha, beta, sigma, mu)`` description; ``mu`` is 0 for strict laws."""

    alpha: float
    beta: float
    sigma: float
    mu: float = 0.0

    def __post_init__(self):
        check_alpha(self.alpha)
        if not -1.0 <= self.beta <= 1.0:
            raise DomainError(f"beta must lie in [-1, 1], got {self.beta}")
        if not self.sigma > 0:
            raise DomainError(f"sigma must be positive, got {self.sigma}")
        if self.mu != 0.0:
            raise DomainError("only strictly stable laws (mu = 0) are supported")


@dataclass(frozen=True)
class AsymptoticConstants:
    """Tail constants: ``y^alpha P(X >= y) -> tail_const_right`` etc.

    ``kappa_alpha`` is only defined for ``alpha`` in ``(1, 2)``, where it
    scales the light (left for beta = 1) tail; it is ``None`` otherwise.
    """

    c_alpha: float
    kappa_alpha: Optional[float]
    tail_const_right: float
    tail_const_left: float


def from_levy(canon: LevyCanonical) -> StableParams:
    """Convert Lévy weights to ``(alpha, beta, sigma, 0)``."""
    total = canon.c1 + canon.c2
    beta = (canon.c1 - canon.c2) / total
    sigma_a = levy_scale_factor(canon.alpha) * total
    return StableParams(canon.alpha, beta, sigma_a ** (1.0 / canon.alpha))


def to_levy(params: StableParams) -> LevyCanonical:
    """Inverse of :func:`from_levy`."""
    total = params.sigma**params.alpha / levy_scale_factor(params.alpha)
    c1 = 0.5 * (1.0 + params.beta) * total
    c2 = 0.5 * (1.0 - params.beta) * total
    return LevyCanonical(params.alpha, c1, c2)


def c_alpha(alpha: float) -> float:
    """``1 / (alpha Gamma(-alpha) cos((2 - alpha) pi / 2))``.

    Equals the reciprocal of the improper integral of ``x^(-alpha) sin x``
    over ``(0, inf)``.
    """
    return 1.0 / (alpha * levy_scale_factor(alpha))


def constants(params: StableParams) -> AsymptoticConstants:
    a = params.alpha
    ca = c_alpha(a)
    sa = params.sigma**a
    kappa = None
    if a > 1.0:
        kappa = a * params.sigma / math.cos((2.0 - a) * math.pi / 2.0)
    return AsymptoticConstants(
        c_alpha=ca,
        kappa_alpha=kappa,
        tail_const_right=ca * 0.5 * (1.0 + params.beta) * sa,
        tail_const_left=ca * 0.5 * (1.0 - params.beta) * sa,
    )


def c_alpha_regime(alpha: float) -> tuple[str, float, float]:
    """Nearest asymptotic regime of ``C_alpha``.

    Returns ``(label, exact_value, regime_approximation)`` where the label
    is ``"alpha->0"`` (approx. 1), ``"alpha->1"`` (approx. 2/pi) or
    ``"alpha->2"`` (approx. 2 - alpha).
    """
    alpha = check_alpha(alpha)
    exact = c_alpha(alpha)
    if alpha < 0.5:
        return "alpha->0", exact, 1.0
    if alpha < 1.5:
        return "alpha->1", exact, 2.0 / math.pi
    return "alpha->2", exact, 2.0 - alpha
