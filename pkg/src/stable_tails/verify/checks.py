"""Distribution-level checks: empirical CF, residual-series moments and MGF, KS distances."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import special, stats

from ..analytic.residual import mgf_S, residual_summary
from ..core import check_alpha
from ..errors import DomainError
from .sources import SamplerSource

__all__ = [
    "CFReport",
    "MomentReport",
    "MGFReport",
    "KSResult",
    "empirical_cf",
    "verify_cf",
    "verify_residual_moments",
    "verify_mgf",
    "ks_test",
    "ks_two_sample",
    "levy_cdf",
    "levy_median",
]


def empirical_cf(samples: np.ndarray, t_grid) -> np.ndarray:
    t = np.atleast_1d(np.asarray(t_grid, dtype=float))
    out = np.empty(t.shape, dtype=complex)
    for i, tt in enumerate(t):
        arg = tt * samples
        out[i] = complex(np.cos(arg).mean(), np.sin(arg).mean())
    return out


@dataclass(frozen=True)
class CFReport:
    t: np.ndarray
    empirical: np.ndarray
    analytic: np.ndarray
    stderr: np.ndarray
    n: int
    seed: int

    @property
    def errors(self) -> np.ndarray:
        return np.abs(self.empirical - self.analytic)

    @property
    def sup_error(self) -> float:
        return float(self.errors.max())

    def within(self, k: float = 3.0) -> np.ndarray:
        """Grid points where the error is inside ``k`` standard errors."""
        return self.errors <= k * self.stderr


def verify_cf(source, cf: Callable, t_grid: Sequence[float], n: int, seed: int = 0) -> CFReport:
    """Sup-norm distance between the empirical CF of ``source`` and ``cf`` over ``t_grid``.

    ``stderr`` is the per-point standard error of the complex mean,
    ``sqrt((1 - |phi|^2) / n)``, which never exceeds ``1/sqrt(n)``.
    """
    t = np.asarray(t_grid, dtype=float)
    if not np.all(np.isfinite(t)):
        raise DomainError("t grid must be finite")
    x = source.draw(n, seed) if isinstance(source, SamplerSource) else np.asarray(source, dtype=float)
    emp = empirical_cf(x, t)
    ref = np.asarray(cf(t), dtype=complex)
    se = np.sqrt(np.clip(1.0 - np.abs(ref) ** 2, 0.0, None) / x.size)
    return CFReport(t, emp, ref, se, int(x.size), int(seed))


@dataclass(frozen=True)
class MomentReport:
    alpha: float
    x: float
    n: int
    mean_hat: float
    mean: float
    mean_se: float
    var_hat: float
    variance: float
    var_se: float
    tolerance_se: float = 3.0

    @property
    def mean_z(self) -> float:
        return (self.mean_hat - self.mean) / self.mean_se

    @property
    def var_z(self) -> float:
        return (self.var_hat - self.variance) / self.var_se

    @property
    def passed(self) -> bool:
        return abs(self.mean_z) <= self.tolerance_se and abs(self.var_z) <= self.tolerance_se


def verify_residual_moments(alpha: float, x: float, n: int = 1_000_000, seed: int = 0,
                            tolerance_se: float = 3.0, series_config=None) -> MomentReport:
    """Sample mean and variance of ``S(x)`` against the closed forms.

    The variance standard error is estimated from the fourth central moment.
    """
    ref = residual_summary(alpha, x)
    s = SamplerSource("asymmetric", alpha, method="series", variable="S", x=x, series_config=series_config).draw(n, seed)
    m = float(s.mean())
    d = s - m
    v = float(d @ d / (n - 1))
    m4 = float(np.mean(d**4))
    return MomentReport(alpha, float(x), n, m, ref.mean, math.sqrt(v / n), v, ref.variance,
                        math.sqrt(max(m4 - v * v, 0.0) / n), tolerance_se)


@dataclass(frozen=True)
class MGFReport:
    alpha: float
    x: float
    n: int
    lambdas: np.ndarray
    mc: np.ndarray
    exact: np.ndarray
    stderr: np.ndarray

    @property
    def rel_err(self) -> np.ndarray:
        return np.abs(self.mc - self.exact) / self.exact

    def passed(self, rtol: float = 0.015) -> bool:
        return bool(np.all(self.rel_err <= rtol))


def verify_mgf(alpha: float, x: float, lambdas: Sequence[float], n: int = 1_000_000, seed: int = 0,
               series_config=None) -> MGFReport:
    lam = np.asarray(lambdas, dtype=float)
    if np.any(lam > 0):
        raise DomainError("the MGF check needs lambda <= 0")
    check_alpha(alpha, allow="low")
    s = SamplerSource("asymmetric", alpha, method="series", variable="S", x=x, series_config=series_config).draw(n, seed)
    mc, se = [], []
    for l in lam:
        v = np.exp(l * s)
        mc.append(float(v.mean()))
        se.append(float(v.std() / math.sqrt(n)))
    exact = np.array([mgf_S(alpha, x, float(l)) for l in lam])
    return MGFReport(float(alpha), float(x), n, lam, np.array(mc), exact, np.array(se))


@dataclass(frozen=True)
class KSResult:
    statistic: float
    n: int
    pvalue: float

    @property
    def critical_99(self) -> float:
        """Asymptotic 99% critical value ``1.63 / sqrt(n)``."""
        return 1.63 / math.sqrt(self.n)


def ks_test(samples, cdf: Callable) -> KSResult:
    """One-sample KS distance ``sup |F_n - F|``."""
    x = np.asarray(samples, dtype=float)
    if x.size < 1000:
        raise DomainError(f"KS test needs at least 1000 samples, got {x.size}")
    r = stats.kstest(x, cdf)
    return KSResult(float(r.statistic), int(x.size), float(r.pvalue))


def ks_two_sample(a, b) -> KSResult:
    r = stats.ks_2samp(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
    n_eff = int(len(a) * len(b) / (len(a) + len(b)))
    return KSResult(float(r.statistic), n_eff, float(r.pvalue))


def levy_cdf(x, c: float):
    """CDF of the Lévy law with scale ``c``: ``erfc(sqrt(c / (2x)))`` for ``x > 0``."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(x > 0, special.erfc(np.sqrt(c / (2.0 * np.where(x > 0, x, 1.0)))), 0.0)
    return out if out.ndim else float(out)


def levy_median(c: float) -> float:
    """``c / (2 erfcinv(1/2)^2)``."""
    return c / (2.0 * special.erfcinv(0.5) ** 2)
