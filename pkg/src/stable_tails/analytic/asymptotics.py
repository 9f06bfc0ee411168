"""Light-tail asymptotics of totally skewed laws with ``alpha in (1, 2)``."""

from __future__ import annotations

import math

from ..core import check_alpha
from ..errors import DomainError

__all__ = ["kappa_alpha", "asymptotic_left_rate"]


def kappa_alpha(alpha: float, sigma: float) -> float:
    """``alpha sigma / cos((2 - alpha) pi / 2)``."""
    alpha = check_alpha(alpha, allow="high")
    return alpha * sigma / math.cos(0.5 * (2.0 - alpha) * math.pi)


def asymptotic_left_rate(alpha: float, sigma: float, y: float, printed_exponent: bool = False) -> float:
    """Leading-order decay of the light tail at distance ``|y|``.

    ``(2 alpha pi (alpha-1))^(-1/2) z^(-alpha/(2(alpha-1))) exp(-(alpha-1) z^(alpha/(alpha-1)))``
    with ``z = |y| / kappa_alpha``.  ``printed_exponent=True`` uses
    ``z^(-alpha/(alpha-1))`` inside the exponential instead; the exponential
    then tends to one and only polynomial decay is left.  It is kept for
    comparison only.
    """
    alpha = check_alpha(alpha, allow="high")
    if not sigma > 0:
        raise DomainError(f"sigma must be positive, got {sigma}")
    if y == 0:
        raise DomainError("the rate is an asymptotic statement for |y| > 0")
    z = abs(y) / kappa_alpha(alpha, sigma)
    q = alpha / (alpha - 1.0)
    inner = z ** (-q) if printed_exponent else z**q
    return z ** (-0.5 * q) * math.exp(-(alpha - 1.0) * inner) / math.sqrt(2.0 * alpha * math.pi * (alpha - 1.0))
