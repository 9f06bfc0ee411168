"""Series samplers built on Poisson arrival times.

All series here have the shape ``sum_i a * eps_i * p_i^(-1/alpha)`` where
``p_i`` are the points of a unit-rate Poisson process (``p_i = tau_i``, or
``p_i = x + tau~_i`` for the residual series ``S(x)``) and ``eps_i`` are
Rademacher signs in the symmetric case.  Conditionally on the last point
kept, ``u = p_N``, the discarded points form a Poisson process on
``(u, inf)``, so the remainder has cumulants

    kappa_k(u) = a^k u^(1 - k/alpha) / (k/alpha - 1)

(odd cumulants vanish for symmetric signs).  These drive both the stopping
rule and the remainder compensation:

* ``compensate=False``: the series is cut at the first ``N`` whose
  remainder scale (mean for positive series, standard deviation otherwise)
  falls below ``tail_tolerance``.
* ``compensate=True``: the conditional remainder mean is added.  With
  ``gaussian_remainder`` the centred remainder is also replaced by a normal
  draw with the conditional variance, and the stopping rule then targets
  the first cumulant that is not reproduced (``kappa_3/6``, or
  ``kappa_4/24`` for symmetric series), i.e. the leading error of the log
  characteristic function at unit frequency.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..core import check_alpha
from ..errors import ConfigurationError, TruncationWarning
from .arrivals import ArrivalStream, ResidualStream
from .sharding import DEFAULT_SHARD_SIZE, run_sharded

__all__ = [
    "SeriesConfig",
    "Asym12Series",
    "integral_compensator",
    "printed_compensator",
    "sample_asym_01",
    "sample_sym",
    "sample_asym_12",
    "sample_residual_S",
    "asym01_batch",
    "sym_batch",
    "asym12_batch",
    "residual_batch",
]

# rows x columns per vectorized step; bounds peak memory at ~32 MB per array
_MAX_ELEMENTS = 1 << 22
_CHUNK_ROWS = 1 << 15
POSITIVITY_MARGIN = 6.0


@dataclass(frozen=True)
class SeriesConfig:
    max_terms: int = 1_000_000
    tail_tolerance: float = 1e-4
    compensate: bool = True
    gaussian_remainder: bool = True

    def __post_init__(self):
        if int(self.max_terms) < 1:
            raise ConfigurationError(f"max_terms must be >= 1, got {self.max_terms}")
        if not self.tail_tolerance > 0:
            raise ConfigurationError(f"tail_tolerance must be positive, got {self.tail_tolerance}")

    @property
    def mode(self) -> str:
        if not self.compensate:
            return "none"
        return "gaussian" if self.gaussian_remainder else "mean"


def integral_compensator(alpha: float, i) -> np.ndarray:
    """``int_{i-1}^{i} s^(-1/alpha) ds``, the centring that makes the
    ``alpha in (1, 2)`` series converge to a mean-zero law."""
    q = (alpha - 1.0) / alpha
    i = np.asarray(i, dtype=float)
    return (i**q - (i - 1.0) ** q) / q


def printed_compensator(alpha: float, i) -> np.ndarray:
    """``((alpha-1)/alpha) (i^q - (i-1)^q)`` with ``q = (alpha-1)/alpha``.

    Kept for reference only: its partial sums grow like ``q^2`` times those
    of :func:`integral_compensator`, too slowly to centre the series, which
    therefore drifts to ``+inf`` as terms are added.
    """
    q = (alpha - 1.0) / alpha
    i = np.asarray(i, dtype=float)
    return q * (i**q - (i - 1.0) ** q)


@dataclass(frozen=True)
class Asym12Series:
    """Totally asymmetric ``alpha in (1, 2)`` series ``c sum (tau_i^(-1/alpha) - a_i)``.

    ``c_alpha_series`` must come from a calibration (see
    :mod:`stable_tails.sampler.calibration`); sampling with ``None`` raises
    :class:`ConfigurationError`.
    """

    alpha: float
    c_alpha_series: Optional[float] = None
    compensator: str = "integral"

    def __post_init__(self):
        check_alpha(self.alpha, allow="high")
        if self.compensator not in ("integral", "printed"):
            raise ConfigurationError(f"unknown compensator {self.compensator!r}")

    @classmethod
    def calibrated(cls, alpha: float, allow_calibrate: bool = False) -> "Asym12Series":
        from .calibration import lookup_c_alpha

        return cls(alpha, lookup_c_alpha(alpha, allow_calibrate=allow_calibrate))

    def compensators(self, n: int) -> np.ndarray:
        i = np.arange(1, n + 1)
        fn = integral_compensator if self.compensator == "integral" else printed_compensator
        return fn(self.alpha, i)

    def compensator_sum(self, n):
        """Closed form of ``a_1 + ... + a_n`` (the sums telescope)."""
        q = (self.alpha - 1.0) / self.alpha
        coef = 1.0 / q if self.compensator == "integral" else q
        return coef * np.asarray(n, dtype=float) ** q

    def require_calibrated(self) -> float:
        if self.c_alpha_series is None or not self.c_alpha_series > 0:
            raise ConfigurationError(
                f"series constant for alpha={self.alpha} is not calibrated; "
                "use Asym12Series.calibrated() or calibrate_c_alpha()"
            )
        return float(self.c_alpha_series)


@dataclass(frozen=True)
class _PowerSeries:
    alpha: float
    scale: float
    kind: str  # "positive" | "symmetric" | "centered"
    offset: float = 0.0

    def cumulant(self, k: int, u):
        a, al = self.scale, self.alpha
        return a**k * np.power(u, 1.0 - k / al) / (k / al - 1.0)

    def stop_level(self, cfg: SeriesConfig) -> float:
        """Point level ``u*`` beyond which the stopping metric is below tolerance.

        Every metric is of the form ``K u^(-p)``.
        """
        a, al, tol = self.scale, self.alpha, cfg.tail_tolerance
        mode = cfg.mode
        if mode == "gaussian":
            k = 4 if self.kind == "symmetric" else 3
            K = a**k / (math.factorial(k) * (k / al - 1.0))
            p = k / al - 1.0
        elif mode == "none" and self.kind == "positive":
            K = a / (1.0 / al - 1.0)
            p = 1.0 / al - 1.0
        else:
            K = a / math.sqrt(2.0 / al - 1.0)
            p = 0.5 * (2.0 / al - 1.0)
        u = (K / tol) ** (1.0 / p)
        if mode == "gaussian" and self.kind == "positive":
            # the normal remainder is clipped at zero; keep its mean
            # POSITIVITY_MARGIN standard deviations above zero so the clip
            # never biases the variance (kappa_1 / sqrt(kappa_2) grows like sqrt(u))
            r = POSITIVITY_MARGIN * (1.0 / al - 1.0) / math.sqrt(2.0 / al - 1.0)
            u = max(u, r * r)
        return u


def _positive_part(x):
    return np.maximum(x, 0.0)


def _finish(spec: _PowerSeries, cfg: SeriesConfig, S, U, N, z, series: Optional[Asym12Series] = None):
    """Add compensators/remainders to partial sums ``S`` with last point ``U``."""
    mode = cfg.mode
    if spec.kind == "centered":
        assert series is not None
        a = spec.scale
        if mode == "none":
            out = S - a * series.compensator_sum(N)
        else:
            q = (spec.alpha - 1.0) / spec.alpha
            out = S - a * np.power(U, q) / q
            if mode == "gaussian":
                out = out + np.sqrt(spec.cumulant(2, U)) * z
        return out
    if spec.kind == "positive":
        if mode == "none":
            return S
        rem = spec.cumulant(1, U)
        if mode == "gaussian":
            rem = _positive_part(rem + np.sqrt(spec.cumulant(2, U)) * z)
        return S + rem
    if mode == "gaussian":
        return S + np.sqrt(spec.cumulant(2, U)) * z
    return S


def _check_centered(cfg: SeriesConfig, series: Asym12Series):
    if series.compensator == "printed" and cfg.compensate:
        raise ConfigurationError(
            "remainder compensation is undefined with the printed compensator (its remainder mean is infinite)"
        )


# ---------------------------------------------------------------------------
# scalar samplers (explicit loop over an ArrivalStream)


def _scalar(spec: _PowerSeries, cfg: SeriesConfig, next_point, rng, series=None) -> float:
    u_star = spec.stop_level(cfg)
    inv = -1.0 / spec.alpha
    S = 0.0
    N = 0
    while True:
        p = next_point()
        N += 1
        term = spec.scale * p**inv
        if spec.kind == "symmetric":
            term = term if rng.random() < 0.5 else -term
        S += term
        if p > u_star:
            break
        if N >= cfg.max_terms:
            warnings.warn(
                TruncationWarning(f"max_terms={cfg.max_terms} reached with remainder above tolerance"),
                stacklevel=3,
            )
            break
    z = rng.standard_normal() if cfg.mode == "gaussian" else 0.0
    return float(_finish(spec, cfg, S, p, N, z, series))


def sample_asym_01(alpha: float, cfg: Optional[SeriesConfig] = None, stream: Optional[ArrivalStream] = None) -> float:
    """One draw of ``sum (alpha tau_i)^(-1/alpha)``, the ``beta = 1`` law for ``alpha < 1``."""
    alpha = check_alpha(alpha, allow="low")
    cfg = cfg or SeriesConfig()
    stream = stream or ArrivalStream()
    spec = _PowerSeries(alpha, alpha ** (-1.0 / alpha), "positive")
    return _scalar(spec, cfg, stream.next_arrival, stream.rng)


def sample_sym(alpha: float, cfg: Optional[SeriesConfig] = None, stream: Optional[ArrivalStream] = None) -> float:
    """One draw of ``(alpha/2)^(-1/alpha) sum eps_i tau_i^(-1/alpha)``."""
    alpha = check_alpha(alpha)
    cfg = cfg or SeriesConfig()
    stream = stream or ArrivalStream()
    spec = _PowerSeries(alpha, (alpha / 2.0) ** (-1.0 / alpha), "symmetric")
    return _scalar(spec, cfg, stream.next_arrival, stream.rng)


def sample_asym_12(
    alpha: float,
    series: Asym12Series,
    cfg: Optional[SeriesConfig] = None,
    stream: Optional[ArrivalStream] = None,
) -> float:
    """One draw of ``c sum (tau_i^(-1/alpha) - a_i)``."""
    alpha = check_alpha(alpha, allow="high")
    if series.alpha != alpha:
        raise ConfigurationError(f"series calibrated for alpha={series.alpha}, requested {alpha}")
    cfg = cfg or SeriesConfig()
    _check_centered(cfg, series)
    stream = stream or ArrivalStream()
    spec = _PowerSeries(alpha, series.require_calibrated(), "centered")
    return _scalar(spec, cfg, stream.next_arrival, stream.rng, series)


def sample_residual_S(alpha: float, x: float, cfg: Optional[SeriesConfig] = None, stream=None) -> float:
    """One draw of ``S(x) = sum alpha^(-1/alpha) (x + tau~_i)^(-1/alpha)``.

    ``stream`` may be a :class:`ResidualStream` (its ``tau~_i`` are used)
    or a plain :class:`ArrivalStream` (whose arrivals have the same law).
    """
    alpha = check_alpha(alpha, allow="low")
    if not x > 0:
        raise ValueError(f"x must be positive, got {x}")
    cfg = cfg or SeriesConfig()
    stream = stream or ArrivalStream()
    nxt = stream.next_tilde if isinstance(stream, ResidualStream) else stream.next_arrival
    spec = _PowerSeries(alpha, alpha ** (-1.0 / alpha), "positive", offset=float(x))
    return _scalar(spec, cfg, lambda: x + nxt(), stream.rng)


# ---------------------------------------------------------------------------
# vectorized batch samplers


def _chunk(rng: np.random.Generator, m: int, spec: _PowerSeries, cfg: SeriesConfig, u_star: float):
    """Partial sums for ``m`` independent series.

    Returns ``(S, U, N, truncated)``: partial sum, last point kept, number
    of terms and a mask of rows that hit ``max_terms``.
    """
    inv = -1.0 / spec.alpha
    tau = np.zeros(m)
    S = np.zeros(m)
    U = np.zeros(m)
    N = np.zeros(m, dtype=np.int64)
    trunc = np.zeros(m, dtype=bool)
    active = np.arange(m)
    expected = max(u_star - spec.offset, 1.0)
    block = int(expected + 5.0 * math.sqrt(expected) + 8)
    while active.size:
        k = active.size
        width = int(min(block, max(8, _MAX_ELEMENTS // k), cfg.max_terms))
        T = tau[active, None] + np.cumsum(rng.standard_exponential((k, width)), axis=1)
        P = spec.offset + T
        terms = spec.scale * np.power(P, inv)
        if spec.kind == "symmetric":
            terms *= 1.0 - 2.0 * (rng.random((k, width)) < 0.5)
        beyond = P > u_star
        hit = beyond.any(axis=1)
        first = np.where(hit, beyond.argmax(axis=1), width)
        room = cfg.max_terms - N[active]
        take = np.minimum(np.where(hit, first + 1, width), room)
        cols = np.arange(width)
        S[active] += np.where(cols[None, :] < take[:, None], terms, 0.0).sum(axis=1)
        rows = np.arange(k)
        last = take - 1
        tau[active] = T[rows, last]
        U[active] = P[rows, last]
        N[active] += take
        stopped = hit & (first + 1 <= room)
        capped = ~stopped & (take >= room)
        trunc[active[capped]] = True
        active = active[~(stopped | capped)]
        block = max(block // 2, 64)
    return S, U, N, trunc


def _batch(spec, cfg, n, seed, shard_size, series=None):
    u_star = spec.stop_level(cfg)
    stats = []

    def work(rng, size):
        out = np.empty(size)
        nterms = np.empty(size, dtype=np.int64)
        ntrunc = 0
        for lo in range(0, size, _CHUNK_ROWS):
            m = min(_CHUNK_ROWS, size - lo)
            S, U, N, trunc = _chunk(rng, m, spec, cfg, u_star)
            z = rng.standard_normal(m) if cfg.mode == "gaussian" else 0.0
            out[lo : lo + m] = _finish(spec, cfg, S, U, N, z, series)
            nterms[lo : lo + m] = N
            ntrunc += int(trunc.sum())
        stats.append((int(nterms.sum()), int(nterms.max()) if size else 0, ntrunc))
        return out

    x = run_sharded(work, n, seed, shard_size)
    info = {
        "stop_level": u_star,
        "mean_terms": sum(s[0] for s in stats) / max(n, 1),
        "max_terms_used": max((s[1] for s in stats), default=0),
        "truncated": sum(s[2] for s in stats),
    }
    if info["truncated"]:
        warnings.warn(
            TruncationWarning(
                f"{info['truncated']} of {n} draws hit max_terms={cfg.max_terms} before the remainder "
                f"fell below tail_tolerance={cfg.tail_tolerance}"
            ),
            stacklevel=3,
        )
    return x, info


def asym01_batch(alpha, n, cfg=None, seed=0, shard_size=DEFAULT_SHARD_SIZE, return_info=False):
    """``n`` draws of the totally asymmetric ``alpha < 1`` law (Lévy weights 1, 0)."""
    alpha = check_alpha(alpha, allow="low")
    spec = _PowerSeries(alpha, alpha ** (-1.0 / alpha), "positive")
    x, info = _batch(spec, cfg or SeriesConfig(), n, seed, shard_size)
    return (x, info) if return_info else x


def sym_batch(alpha, n, cfg=None, seed=0, shard_size=DEFAULT_SHARD_SIZE, return_info=False):
    """``n`` draws of the symmetric law (Lévy weights 1, 1)."""
    alpha = check_alpha(alpha)
    spec = _PowerSeries(alpha, (alpha / 2.0) ** (-1.0 / alpha), "symmetric")
    x, info = _batch(spec, cfg or SeriesConfig(), n, seed, shard_size)
    return (x, info) if return_info else x


def asym12_batch(alpha, n, series=None, cfg=None, seed=0, shard_size=DEFAULT_SHARD_SIZE, return_info=False):
    """``n`` draws of the totally asymmetric ``alpha in (1, 2)`` law."""
    alpha = check_alpha(alpha, allow="high")
    series = series or Asym12Series.calibrated(alpha)
    if series.alpha != alpha:
        raise ConfigurationError(f"series calibrated for alpha={series.alpha}, requested {alpha}")
    cfg = cfg or SeriesConfig()
    _check_centered(cfg, series)
    spec = _PowerSeries(alpha, series.require_calibrated(), "centered")
    x, info = _batch(spec, cfg, n, seed, shard_size, series)
    return (x, info) if return_info else x


def residual_batch(alpha, x, n, cfg=None, seed=0, shard_size=DEFAULT_SHARD_SIZE, return_info=False):
    """``n`` draws of the residual series ``S(x)``."""
    alpha = check_alpha(alpha, allow="low")
    if not x > 0:
        raise ValueError(f"x must be positive, got {x}")
    spec = _PowerSeries(alpha, alpha ** (-1.0 / alpha), "positive", offset=float(x))
    out, info = _batch(spec, cfg or SeriesConfig(), n, seed, shard_size)
    return (out, info) if return_info else out
