"""Calibration of the scale constant of the ``alpha in (1, 2)`` asymmetric series.

The constant is fitted, not imported: draws of the unit-scale series
``sum (tau_i^(-1/alpha) - a_i)`` are generated once, and ``c`` minimizes

    sum_t |mean(exp(i t c X)) - phi(t)|^2

over a fixed frequency grid, with ``phi`` the quadrature value of the
target characteristic function.  Results live in a versioned JSON table
shipped with the package; regenerate it with

    python3 -m stable_tails.sampler.calibration --write
"""

from __future__ import annotations

import argparse
import json
import math
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

import numpy as np
from scipy.optimize import minimize_scalar

from ..core import LevyCanonical, check_alpha
from ..errors import ConfigurationError

__all__ = [
    "CalibrationResult",
    "calibrate_c_alpha",
    "load_table",
    "lookup_c_alpha",
    "TABLE_VERSION",
    "DEFAULT_T_GRID",
    "table_alphas",
]

TABLE_VERSION = 1
TABLE_FILE = "c_alpha_table.json"
DEFAULT_T_GRID = tuple(float(t) for t in np.round(np.linspace(0.2, 2.0, 10), 10))
DEFAULT_TOLERANCE = 3e-3
# draws x expected terms per alpha; keeps the alpha -> 2 end affordable
ELEMENT_BUDGET = 4e8
MAX_DRAWS = 400_000


def table_alphas() -> list[float]:
    return [round(1.05 + 0.05 * k, 2) for k in range(19)]


@dataclass(frozen=True)
class CalibrationResult:
    alpha: float
    c_alpha_series: float
    rms_residual: float
    n: int
    seed: int
    tail_tolerance: float


def _unit_draws(alpha, n, seed, tol):
    from .series import Asym12Series, SeriesConfig, asym12_batch

    return asym12_batch(alpha, n, series=Asym12Series(alpha, 1.0), cfg=SeriesConfig(tail_tolerance=tol), seed=seed)


def _target(alpha, t_grid):
    from ..analytic.cf import CharFn

    return np.asarray(CharFn.stable(LevyCanonical.asymmetric(alpha))(np.asarray(t_grid)))


def default_draws(alpha: float, tol: float = DEFAULT_TOLERANCE) -> int:
    from .series import Asym12Series, SeriesConfig, _PowerSeries

    u_star = _PowerSeries(alpha, 1.0, "centered").stop_level(SeriesConfig(tail_tolerance=tol))
    return int(min(MAX_DRAWS, ELEMENT_BUDGET / max(u_star, 1.0)))


def calibrate_c_alpha(alpha: float, n: int | None = None, seed: int = 20240601,
                      t_grid=DEFAULT_T_GRID, tail_tolerance: float = DEFAULT_TOLERANCE) -> CalibrationResult:
    alpha = check_alpha(alpha, allow="high")
    n = n or default_draws(alpha, tail_tolerance)
    x = _unit_draws(alpha, n, seed, tail_tolerance)
    t = np.asarray(t_grid, dtype=float)
    phi = _target(alpha, t)

    def loss(c):
        emp = np.exp(1j * np.outer(t, c * x)).mean(axis=1)
        return float(np.sum(np.abs(emp - phi) ** 2))

    res = minimize_scalar(loss, bounds=(0.3, 1.5), method="bounded", options={"xatol": 1e-7})
    return CalibrationResult(alpha, float(res.x), math.sqrt(res.fun / t.size), int(n), int(seed), tail_tolerance)


@lru_cache(maxsize=1)
def load_table() -> dict:
    with resources.files(__package__).joinpath(TABLE_FILE).open("r", encoding="utf-8") as fh:
        table = json.load(fh)
    if table.get("table_version") != TABLE_VERSION:
        raise ConfigurationError(
            f"calibration table version {table.get('table_version')} does not match expected {TABLE_VERSION}"
        )
    return table


def lookup_c_alpha(alpha: float, allow_calibrate: bool = False) -> float:
    """Series constant for ``alpha``.

    Grid points are returned as stored; values between grid points are
    interpolated (cubic in alpha, the table is smooth).  Outside the grid
    the constant is calibrated on demand if ``allow_calibrate`` is set.
    """
    alpha = check_alpha(alpha, allow="high")
    entries = load_table()["entries"]
    al = np.array([e["alpha"] for e in entries])
    cs = np.array([e["c_alpha_series"] for e in entries])
    hit = np.flatnonzero(np.abs(al - alpha) < 1e-9)
    if hit.size:
        return float(cs[hit[0]])
    if al[0] <= alpha <= al[-1]:
        from scipy.interpolate import CubicSpline

        return float(CubicSpline(al, cs)(alpha))
    if allow_calibrate:
        return calibrate_c_alpha(alpha).c_alpha_series
    raise ConfigurationError(
        f"no calibrated series constant for alpha={alpha} (table covers [{al[0]}, {al[-1]}]); "
        "pass allow_calibrate=True to fit one"
    )


def build_table(alphas=None, seed: int = 20240601, progress=None) -> dict:
    entries = []
    for k, a in enumerate(alphas or table_alphas()):
        r = calibrate_c_alpha(a, seed=seed + k)
        entries.append(asdict(r))
        if progress:
            progress(r)
    return {
        "table_version": TABLE_VERSION,
        "method": "least-squares empirical CF match against quadrature target",
        "t_grid": list(DEFAULT_T_GRID),
        "entries": entries,
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description="Calibrate the asymmetric alpha in (1,2) series constant.")
    ap.add_argument("--write", action="store_true", help="overwrite the shipped table")
    ap.add_argument("--alpha", type=float, action="append", help="calibrate only these alphas (repeatable)")
    args = ap.parse_args(argv)
    report = lambda r: print(f"alpha={r.alpha:.2f} c={r.c_alpha_series:.6f} ref={r.alpha ** (-1 / r.alpha):.6f} "
                             f"rms={r.rms_residual:.2e} n={r.n}", flush=True)
    table = build_table(args.alpha, progress=report)
    if args.write:
        path = Path(__file__).with_name(TABLE_FILE)
        path.write_text(json.dumps(table, indent=2) + "\n", encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
