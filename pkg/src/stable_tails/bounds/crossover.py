"""Where the Pareto term ``A y^-alpha`` overtakes the Gaussian term ``B exp(-kappa delta y^2)``."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from scipy import optimize

from ..core import check_alpha
from ..errors import DomainError, RootNotFoundError

__all__ = [
    "CrossoverResult",
    "crossover",
    "reduced_root",
    "reduced_bracket",
    "reference_scale",
    "UPPER_PRESET",
    "LOWER_PRESET",
    "PRESETS",
]

UPPER_PRESET = (2.0 / math.e, math.exp(0.25), 0.5)
LOWER_PRESET = (math.exp(-1.0) / (400.0 * math.sqrt(math.e)), 1.0 / (400.0 * math.sqrt(math.e)), 1.0)
PRESETS = {"upper": UPPER_PRESET, "lower": LOWER_PRESET}

XTOL = 1e-10


def reduced_bracket(delta: float) -> tuple[float, float]:
    """``((1/delta) ln(1/delta), (2/delta) ln(1/delta))``."""
    L = math.log(1.0 / delta)
    return L / delta, 2.0 * L / delta


def reference_scale(delta: float) -> float:
    """``sqrt((1/delta) ln(1/delta))``."""
    return math.sqrt(math.log(1.0 / delta) / delta)


def _expand_right(g, lo):
    hi = 2.0 * lo
    for _ in range(200):
        if g(hi) > 0:
            return hi
        lo, hi = hi, 2.0 * hi
    raise RootNotFoundError("no sign change found while expanding the bracket")


def reduced_root(delta: float) -> float:
    """Larger root of ``delta y = ln y`` for ``delta in (0, 1/e)``."""
    if not 0.0 < delta < 1.0 / math.e:
        raise DomainError(f"delta y = ln y has two roots only for delta in (0, 1/e), got {delta}")
    g = lambda y: delta * y - math.log(y)
    lo = 1.0 / delta  # g is minimal (negative) here
    hi = _expand_right(g, lo)
    return optimize.bisect(g, lo, hi, xtol=XTOL, maxiter=500)


@dataclass(frozen=True)
class CrossoverResult:
    alpha: float
    delta: float
    y_star: float
    residual: float
    reduced_root: float | None
    bracket: tuple[float, float] | None
    reference: float
    two_root_guarantee: bool

    @property
    def ratio(self) -> float:
        return self.y_star / self.reference


def crossover(alpha: float, pareto_coeff: float = UPPER_PRESET[0], gauss_coeff: float = UPPER_PRESET[1],
              kappa: float = UPPER_PRESET[2]) -> CrossoverResult:
    """Larger root ``y*`` of ``A y^-alpha = B exp(-kappa (2-alpha) y^2)``.

    Solved in log form ``g(y) = ln A - alpha ln y - ln B + kappa delta y^2``,
    which decreases up to ``y_min = sqrt(alpha / (2 kappa delta))`` and
    increases afterwards, so the larger root is bracketed on ``[y_min, inf)``.
    When ``delta >= 1/e`` the reduced equation has no bracket guarantee; a
    warning is issued and the reduced fields are ``None``.
    """
    a = check_alpha(alpha, allow="high")
    if not (pareto_coeff > 0 and gauss_coeff > 0 and kappa > 0):
        raise DomainError("coefficients A, B and kappa must be positive")
    d = 2.0 - a
    lnA, lnB = math.log(pareto_coeff), math.log(gauss_coeff)
    g = lambda y: lnA - a * math.log(y) - lnB + kappa * d * y * y
    y_min = math.sqrt(a / (2.0 * kappa * d))
    if g(y_min) >= 0:
        raise RootNotFoundError(
            f"A y^-alpha >= B exp(-kappa delta y^2) for every y at alpha={a}; no crossover exists"
        )
    hi = _expand_right(g, y_min)
    y_star = optimize.bisect(g, y_min, hi, xtol=XTOL, maxiter=500)
    guarantee = d < 1.0 / math.e
    if not guarantee:
        warnings.warn(f"delta = 2 - alpha = {d:.6g} >= 1/e: the two-root bracket guarantee does not hold",
                      RuntimeWarning, stacklevel=2)
    return CrossoverResult(
        alpha=a,
        delta=d,
        y_star=y_star,
        residual=abs(g(y_star)),
        reduced_root=reduced_root(d) if guarantee else None,
        bracket=reduced_bracket(d) if guarantee else None,
        reference=reference_scale(d) if d < 1.0 else math.nan,
        two_root_guarantee=guarantee,
    )
