"""Characteristic functions of stable laws and of the truncation split.

For ``alpha in (1, 2)`` the totally asymmetric law splits as ``X = X_1 + X^1``
where ``X_1`` carries the Lévy measure on ``(0, 1]`` and ``X^1`` the part on
``(1, inf)``; the symmetric law splits the same way at ``|x| = 1``.  Here
``split-inner`` is the small-jump factor and ``split-outer`` the
compound-Poisson factor.

Quadrature conventions: near the origin the integrands behave like
``x^(1-alpha)`` or ``x^(2-alpha)``, which is handled with an algebraic
weight on ``[0, 1]``; on ``[1, inf)`` the oscillatory parts use Fourier
quadrature (QAWF).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy import integrate

from ..core import LevyCanonical, check_alpha, gamma_neg
from ..errors import DomainError, QuadratureError

__all__ = [
    "CharFn",
    "cf_eval",
    "unit_integrals",
    "closed_form_exponent",
    "inner_exponent",
    "outer_exponent",
    "pareto_cf",
    "STABLE_CANONICAL",
    "SPLIT_INNER",
    "SPLIT_OUTER",
]

STABLE_CANONICAL = "stable-canonical"
SPLIT_INNER = "split-inner"
SPLIT_OUTER = "split-outer"

_ABS_TOL = 1e-12
_REL_TOL = 1e-12


def _quad(f, a, b, *, accept=1e-8, **kw):
    kw.setdefault("limit", 200)
    kw.setdefault("epsabs", _ABS_TOL)
    if kw.get("weight") not in ("cos", "sin") or math.isfinite(b):
        # QAWF only honours an absolute tolerance
        kw.setdefault("epsrel", _REL_TOL)
    res = integrate.quad(f, a, b, full_output=1, **kw)
    val, err = res[0], res[1]
    if len(res) > 3 and err > accept * max(1.0, abs(val)):
        raise QuadratureError(f"quadrature on [{a}, {b}] did not converge: {res[3]!r} (abserr={err:.3g})")
    return val


def _cosm1_over_x2(x, t):
    # (cos(tx) - 1) / x^2 without cancellation
    s = np.sin(0.5 * t * x)
    return -2.0 * s * s / (x * x) if x > 0 else -0.5 * t * t


def _sinm_over_x3(x, t):
    # (sin(tx) - tx) / x^3
    u = t * x
    if abs(u) < 1e-2:
        u2 = u * u
        return t**3 * (-1.0 / 6.0 + u2 / 120.0 - u2 * u2 / 5040.0)
    return (math.sin(u) - u) / x**3


@lru_cache(maxsize=256)
def unit_integrals(alpha: float) -> tuple[float, float]:
    """``(J_c, J_s)`` with ``J_c = int_0^inf (1 - cos z) z^(-alpha-1) dz`` and
    ``J_s = int_0^inf (sin z - z 1{alpha>1}) z^(-alpha-1) dz``, by quadrature.

    The one-sided exponent is then ``|t|^alpha (-J_c + i sign(t) J_s)``.
    """
    alpha = check_alpha(alpha)
    # [0, 1] with weight x^(1-alpha) (cos part) or x^(2-alpha)
    jc0 = -_quad(lambda x: _cosm1_over_x2(x, 1.0), 0.0, 1.0, weight="alg", wvar=(1.0 - alpha, 0.0))
    jc1 = 1.0 / alpha - _quad(lambda x: x ** (-alpha - 1.0), 1.0, np.inf, weight="cos", wvar=1.0)
    if alpha < 1.0:
        js0 = _quad(lambda x: math.sin(x) / x if x > 0 else 1.0, 0.0, 1.0, weight="alg", wvar=(-alpha, 0.0))
        js1 = _quad(lambda x: x ** (-alpha - 1.0), 1.0, np.inf, weight="sin", wvar=1.0)
    else:
        js0 = _quad(lambda x: _sinm_over_x3(x, 1.0), 0.0, 1.0, weight="alg", wvar=(2.0 - alpha, 0.0))
        js1 = _quad(lambda x: x ** (-alpha - 1.0), 1.0, np.inf, weight="sin", wvar=1.0) - 1.0 / (alpha - 1.0)
    return jc0 + jc1, js0 + js1


def closed_form_exponent(canon: LevyCanonical, t):
    """``Gamma(-alpha) (c1 (-it)^alpha + c2 (it)^alpha)`` on the principal branch."""
    t = np.asarray(t, dtype=float)
    g = gamma_neg(canon.alpha)
    a = canon.alpha
    mag = np.abs(t) ** a
    ph = -0.5 * math.pi * a * np.sign(t)
    right = mag * np.exp(1j * ph)
    left = mag * np.exp(-1j * ph)
    return g * (canon.c1 * right + canon.c2 * left)


def _canonical_exponent(canon: LevyCanonical, t):
    jc, js = unit_integrals(canon.alpha)
    t = np.asarray(t, dtype=float)
    mag = np.abs(t) ** canon.alpha
    s = np.sign(t)
    return mag * (-(canon.c1 + canon.c2) * jc + 1j * s * (canon.c1 - canon.c2) * js)


def _inner_one_sided(alpha, t):
    if t == 0.0:
        return 0j
    re = _quad(lambda x: _cosm1_over_x2(x, t), 0.0, 1.0, weight="alg", wvar=(1.0 - alpha, 0.0))
    im = _quad(lambda x: _sinm_over_x3(x, t), 0.0, 1.0, weight="alg", wvar=(2.0 - alpha, 0.0))
    return complex(re, im)


def _outer_one_sided(alpha, t):
    """``int_1^inf (e^{itx} - 1) x^(-alpha-1) dx``."""
    if t == 0.0:
        return 0j
    at = abs(t)
    # substitute z = |t| x so the QAWF frequency is one
    g = lambda z: z ** (-alpha - 1.0)
    scale = at**alpha
    c = scale * _quad(g, at, np.inf, weight="cos", wvar=1.0)
    s = scale * _quad(g, at, np.inf, weight="sin", wvar=1.0)
    return complex(c - 1.0 / alpha, s if t > 0 else -s)


def pareto_cf(alpha: float, t, symmetric: bool = False):
    """CF of the Pareto jump law: density ``alpha x^(-alpha-1)`` on ``(1, inf)``,
    or its symmetrization ``alpha/2 |x|^(-alpha-1)`` off ``[-1, 1]``."""
    alpha = check_alpha(alpha)

    def one(tt):
        v = 1.0 + alpha * _outer_one_sided(alpha, float(tt))
        return v.real if symmetric else v

    return _map(one, t)


def inner_exponent(alpha: float, t, symmetric: bool = False):
    """Log-CF of the small-jump part ``X_1`` (Lévy measure restricted to ``|x| <= 1``)."""
    alpha = check_alpha(alpha, allow="high")

    def one(tt):
        v = _inner_one_sided(alpha, float(tt))
        return 2.0 * v.real if symmetric else v

    return _map(one, t)


def outer_exponent(alpha: float, t, symmetric: bool = False):
    """Log-CF of the compound-Poisson part ``X^1``.

    Asymmetric: ``(1/alpha)(phi_Y(t) - 1) - it/(alpha-1)``; symmetric:
    ``(2/alpha)(phi_Ytilde(t) - 1)``.
    """
    alpha = check_alpha(alpha, allow="high")

    def one(tt):
        tt = float(tt)
        phi_y = 1.0 + alpha * _outer_one_sided(alpha, tt)
        if symmetric:
            return (2.0 / alpha) * (phi_y.real - 1.0)
        return (phi_y - 1.0) / alpha - 1j * tt / (alpha - 1.0)

    return _map(one, t)


def _map(fn, t):
    arr = np.asarray(t, dtype=float)
    if arr.ndim == 0:
        return fn(float(arr))
    out = np.array([fn(v) for v in arr.ravel()])
    return out.reshape(arr.shape)


@dataclass(frozen=True)
class CharFn:
    """A characteristic function descriptor.

    Build with :meth:`stable`, :meth:`inner` or :meth:`outer`; evaluate with
    ``cf(t)`` or :func:`cf_eval`.  ``method="closed"`` uses the Gamma-function
    exponent for the canonical descriptor, ``"quad"`` the quadrature one.
    """

    kind: str
    alpha: float
    symmetric: bool
    canon: Optional[LevyCanonical] = None
    method: str = "quad"

    def __post_init__(self):
        if self.kind not in (STABLE_CANONICAL, SPLIT_INNER, SPLIT_OUTER):
            raise DomainError(f"unknown characteristic function kind {self.kind!r}")
        if self.method not in ("quad", "closed"):
            raise DomainError(f"unknown method {self.method!r}")
        if self.kind == STABLE_CANONICAL and self.canon is None:
            raise DomainError("stable-canonical descriptor needs a LevyCanonical")
        if self.kind != STABLE_CANONICAL:
            check_alpha(self.alpha, allow="high")

    @classmethod
    def stable(cls, canon: LevyCanonical, method: str = "quad") -> "CharFn":
        return cls(STABLE_CANONICAL, canon.alpha, canon.is_symmetric, canon, method)

    @classmethod
    def inner(cls, alpha: float, symmetric: bool = False) -> "CharFn":
        return cls(SPLIT_INNER, alpha, symmetric)

    @classmethod
    def outer(cls, alpha: float, symmetric: bool = False) -> "CharFn":
        return cls(SPLIT_OUTER, alpha, symmetric)

    def exponent(self, t):
        if self.kind == STABLE_CANONICAL:
            if self.method == "closed":
                v = closed_form_exponent(self.canon, t)
            else:
                v = _canonical_exponent(self.canon, t)
            if self.symmetric:
                v = np.real(v)
            return v[()] if isinstance(v, np.ndarray) and v.ndim == 0 else v
        if self.kind == SPLIT_INNER:
            return inner_exponent(self.alpha, t, self.symmetric)
        return outer_exponent(self.alpha, t, self.symmetric)

    def __call__(self, t):
        return np.exp(self.exponent(t))


def cf_eval(cf: CharFn, t):
    """Evaluate ``cf`` at ``t`` (scalar or array)."""
    return cf(t)
