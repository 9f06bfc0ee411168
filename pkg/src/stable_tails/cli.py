"""``stable-tails`` command-line front end.

Exit codes: 0 success, 1 verification or numerical failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import sys
import warnings
from typing import Optional, Sequence

import numpy as np

from . import bounds as B
from .analytic import DensityModel
from .bounds import asym_jump_constant, crossover, evaluate_or_refuse, get_spec, list_specs, sym_jump_constant
from .core import ASYMMETRIC, SYMMETRIC, LevyCanonical, c_alpha_regime, check_alpha, constants, from_levy
from .errors import ConfigurationError, DomainError, QuadratureError, RootNotFoundError, SeriesDomainError
from .verify import (
    DEFAULT_CONFIDENCE,
    REPORT_COLUMNS,
    SamplerSource,
    campaign_document,
    config_hash,
    default_grid,
    report_rows,
    run_campaign,
    table_document,
    theorem_ids,
)
from .verify.campaigns import CAMPAIGNS, DEFAULT_POINTS, Campaign, campaign_for_law
from .verify.io import dump_json, write_csv

__all__ = ["main", "build_parser", "parse_grid"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_grid(text: str, positive: bool = True) -> np.ndarray:
    """``lin:a:b:n`` or ``log:a:b:n``."""
    parts = text.split(":")
    if len(parts) != 4 or parts[0] not in ("lin", "log"):
        raise UsageError(f"grid must look like lin:a:b:n or log:a:b:n, got {text!r}")
    try:
        a, b, n = float(parts[1]), float(parts[2]), int(parts[3])
    except ValueError:
        raise UsageError(f"bad grid numbers in {text!r}") from None
    if n < 1 or not (math.isfinite(a) and math.isfinite(b)):
        raise UsageError(f"grid needs finite endpoints and n >= 1, got {text!r}")
    if (positive or parts[0] == "log") and not (a > 0 and b > 0):
        raise UsageError(f"grid endpoints must be positive, got {text!r}")
    return np.geomspace(a, b, n) if parts[0] == "log" else np.linspace(a, b, n)


def _law(beta: int) -> str:
    return ASYMMETRIC if beta == 1 else SYMMETRIC


def _alpha(args) -> float:
    if args.alpha is None:
        raise UsageError("--alpha is required")
    return check_alpha(args.alpha)


def _user_grid(args) -> Optional[np.ndarray]:
    if args.y is not None and args.y_grid is not None:
        raise UsageError("use either --y or --y-grid, not both")
    if args.y is not None:
        if not all(v > 0 for v in args.y):
            raise UsageError("--y values must be positive")
        return np.asarray(args.y, dtype=float)
    if args.y_grid is not None:
        return parse_grid(args.y_grid)
    return None


def _spec_ids(args, law, alpha) -> list[str]:
    if args.spec:
        for sid in args.spec:
            spec = get_spec(sid)
            if spec.law != law:
                raise UsageError(f"{sid} is a bound for the {spec.law} law; pass the matching --beta")
        return list(args.spec)
    return theorem_ids(law, alpha)


def _aux(args) -> dict:
    return {"theta": args.theta} if args.theta is not None else {}


def _emit(args, kind: str, config: dict, columns, rows, warns=()) -> None:
    with _open_out(args.out) as fh:
        if args.format == "json":
            dump_json(table_document(kind, config, columns, rows, warns), fh)
        else:
            h = config_hash(config)
            write_csv(fh, list(columns) + ["config_hash"], [list(r) + [h] for r in rows])


@contextlib.contextmanager
def _open_out(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            yield fh


def _list_specs(args) -> int:
    rows = [[s.id, s.law, s.variable, s.side, s.direction, s.alpha_range, s.known_invalid, s.description]
            for s in list_specs()]
    cols = ["spec_id", "law", "variable", "side", "direction", "alpha_range", "known_invalid", "description"]
    _emit(args, "specs", {"command": "list-specs"}, cols, rows)
    return EXIT_OK


BOUND_COLUMNS = ("spec_id", "alpha", "y", "threshold", "bound", "raw_value", "regime", "valid", "vacuous",
                 "direction", "side", "variable", "message")


def cmd_bounds(args) -> int:
    if args.list_specs:
        return _list_specs(args)
    alpha = _alpha(args)
    law = _law(args.beta)
    ids = _spec_ids(args, law, alpha)
    grid = _user_grid(args)
    rows = []
    for sid in ids:
        spec = get_spec(sid)
        ys = grid if grid is not None else default_grid(sid, alpha, args.points)
        aux = {k: v for k, v in _aux(args).items() if k in spec.aux_params} or None
        for y in ys:
            ev = evaluate_or_refuse(spec, alpha, float(y), aux, args.debug_scale)
            rows.append([sid, alpha, float(y), ev.threshold, ev.bound_value, ev.raw_value, spec.regime, ev.valid,
                         ev.vacuous, spec.direction, spec.side, spec.variable, ev.message])
    cfg = {"command": "bounds", "alpha": alpha, "beta": args.beta, "spec_ids": ids,
           "y": None if grid is None else grid.tolist(), "points": args.points, "aux": _aux(args),
           "scale": args.debug_scale}
    _emit(args, "bounds", cfg, BOUND_COLUMNS, rows)
    return EXIT_OK


def cmd_sample(args) -> int:
    alpha = _alpha(args)
    if args.n < 1:
        raise UsageError("--n must be positive")
    src = SamplerSource(_law(args.beta), alpha, method=args.method, variable=args.variable)
    x = src.draw(args.n, args.seed)
    cfg = {"command": "sample", "n": args.n, "seed": args.seed, "source": src.describe()}
    if args.format == "json":
        with _open_out(args.out) as fh:
            dump_json(table_document("sample", cfg, ["x"], [[v] for v in x.tolist()]), fh)
    else:
        h = config_hash(cfg)
        with _open_out(args.out) as fh:
            write_csv(fh, ["x", "config_hash"], ([v, h] for v in x.tolist()))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.list_specs:
        return _list_specs(args)
    if args.n < 100:
        raise UsageError(f"verification needs --n >= 100, got {args.n}")
    if not 0.5 < args.confidence < 1.0:
        raise UsageError(f"--confidence must lie in (0.5, 1), got {args.confidence}")
    if args.campaign:
        camp: Campaign = CAMPAIGNS[args.campaign]
    else:
        alpha = _alpha(args)
        law = _law(args.beta)
        camp = campaign_for_law(law, alpha, args.points, _user_grid(args), _spec_ids(args, law, alpha))
    res = run_campaign(camp, n=args.n, seed=args.seed, confidence=args.confidence, scale=args.debug_scale,
                       method=args.method, aux=_aux(args))
    cfg = {"command": "verify", "campaign": camp.name, "n": args.n, "seed": args.seed,
           "confidence": args.confidence, "scale": args.debug_scale, "method": args.method, "aux": _aux(args)}
    doc = campaign_document(camp.name, res.reports, cfg)
    with _open_out(args.out) as fh:
        if args.format == "json":
            dump_json(doc, fh)
        else:
            rows = report_rows(res.reports)
            hashes = [r.config_hash for r in res.reports for _ in r.results]
            write_csv(fh, list(REPORT_COLUMNS) + ["config_hash"], [r + [h] for r, h in zip(rows, hashes)])
    c = res.counts()
    print(f"{camp.name}: pass={c['pass']} fail={c['fail']} vacuous={c['vacuous']} "
          f"inconclusive={c['inconclusive']} refused={c['refused']} config_hash={doc['config_hash']}",
          file=sys.stderr)
    return EXIT_FAIL if res.failed else EXIT_OK


CROSSOVER_COLUMNS = ("alpha", "delta", "y_star", "residual", "bracket_low", "bracket_high", "reduced_root",
                     "reference", "ratio", "two_root_guarantee")


def cmd_crossover(args) -> int:
    alphas = args.alpha_list or ([args.alpha] if args.alpha is not None else [1.9, 1.95, 1.99])
    A, Bc, k = B.PRESETS[args.preset]
    A = args.pareto_coeff if args.pareto_coeff is not None else A
    Bc = args.gauss_coeff if args.gauss_coeff is not None else Bc
    k = args.kappa if args.kappa is not None else k
    rows, warns = [], []
    for a in alphas:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            r = crossover(a, A, Bc, k)
        for w in caught:
            msg = f"alpha={a:g}: {w.message}"
            warns.append(msg)
            print(f"warning: {msg}", file=sys.stderr)
        lo, hi = r.bracket if r.bracket else (math.nan, math.nan)
        rows.append([r.alpha, r.delta, r.y_star, r.residual, lo, hi,
                     math.nan if r.reduced_root is None else r.reduced_root, r.reference, r.ratio,
                     r.two_root_guarantee])
    cfg = {"command": "crossover", "alphas": [float(a) for a in alphas], "A": A, "B": Bc, "kappa": k}
    _emit(args, "crossover", cfg, CROSSOVER_COLUMNS, rows, warns)
    return EXIT_OK


DENSITY_COLUMNS = ("x", "series", "inversion", "rel_diff", "series_terms", "series_converged", "cum_mass",
                   "message")


def cmd_density(args) -> int:
    alpha = _alpha(args)
    if args.beta != 0:
        raise UsageError("density is available for the symmetric law only (--beta 0)")
    if args.x is not None and args.x_grid is not None:
        raise UsageError("use either --x or --x-grid, not both")
    if args.x is not None:
        xs = np.asarray(args.x, dtype=float)
    else:
        xs = parse_grid(args.x_grid or "lin:-5:5:21", positive=False)
    model = DensityModel(alpha, sin_convention=args.sin_convention)
    inv = np.array([model.inversion(float(x)) for x in xs])
    cum = np.concatenate([[0.0], np.cumsum(0.5 * np.diff(xs) * (inv[1:] + inv[:-1]))])
    rows = []
    for x, f, m in zip(xs, inv, cum):
        try:
            s = model.series(float(x))
            rel = abs(s.value - f) / abs(f) if f != 0 else math.nan
            rows.append([float(x), s.value, f, rel, s.n_terms, s.converged, m, ""])
        except SeriesDomainError as exc:
            rows.append([float(x), math.nan, f, math.nan, 0, False, m, str(exc)])
    cfg = {"command": "density", "alpha": alpha, "x": xs.tolist(), "sigma": 1.0,
           "sin_convention": args.sin_convention}
    _emit(args, "density", cfg, DENSITY_COLUMNS, rows)
    return EXIT_OK


def cmd_constants(args) -> int:
    alpha = _alpha(args)
    canon = LevyCanonical.symmetric(alpha) if args.beta == 0 else LevyCanonical.asymmetric(alpha)
    p = from_levy(canon)
    k = constants(p)
    label, exact, approx = c_alpha_regime(alpha)
    rows = [["alpha", alpha], ["beta", p.beta], ["sigma", p.sigma], ["levy_c1", canon.c1], ["levy_c2", canon.c2],
            ["c_alpha", k.c_alpha], ["c_alpha_regime", label], ["c_alpha_regime_approx", approx],
            ["tail_const_right", k.tail_const_right], ["tail_const_left", k.tail_const_left],
            ["kappa_alpha", math.nan if k.kappa_alpha is None else k.kappa_alpha]]
    if alpha > 1.0:
        jump = asym_jump_constant(alpha) if args.beta == 1 else sym_jump_constant(alpha)
        rows.append(["big_jump_constant", jump])
    cfg = {"command": "constants", "alpha": alpha, "beta": args.beta}
    _emit(args, "constants", cfg, ["name", "value"], rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, help="stability index in (0,1) or (1,2)")
    common.add_argument("--beta", type=int, choices=(0, 1),
                        help="1 totally skewed (default), 0 symmetric; density defaults to 0")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="output path (default stdout)")

    grid = argparse.ArgumentParser(add_help=False)
    grid.add_argument("--y", type=float, nargs="+", help="explicit y values")
    grid.add_argument("--y-grid", help="lin:a:b:n or log:a:b:n")
    grid.add_argument("--points", type=int, default=DEFAULT_POINTS, help="points per default regime grid")
    grid.add_argument("--spec", action="append", help="bound id (repeatable); default: every theorem-level id")
    grid.add_argument("--theta", type=float, help="free parameter of the asymmetric alpha<1 lower bound")
    grid.add_argument("--list-specs", action="store_true", help="print the bound-id vocabulary and exit")
    grid.add_argument("--debug-scale", type=float, default=1.0,
                      help="multiply bound values (testing the failure path only; not a model parameter)")

    p = argparse.ArgumentParser(prog="stable-tails", description="Tail bounds for stable laws: evaluation, "
                                "sampling and Monte Carlo verification.")
    sub = p.add_subparsers(dest="command", required=True)

    sb = sub.add_parser("bounds", parents=[common, grid], help="evaluate tail bounds")
    sb.set_defaults(func=cmd_bounds)

    ss = sub.add_parser("sample", parents=[common], help="draw samples")
    ss.add_argument("--n", type=int, default=10)
    ss.add_argument("--method", choices=("auto", "series", "cms", "compound"), default="auto")
    ss.add_argument("--variable", choices=("X", "X^1"), default="X", help="full law or its big-jump part")
    ss.set_defaults(func=cmd_sample)

    sv = sub.add_parser("verify", parents=[common, grid], help="Monte Carlo verification campaign")
    sv.add_argument("--n", type=int, default=1_000_000)
    sv.add_argument("--confidence", type=float, default=DEFAULT_CONFIDENCE)
    sv.add_argument("--method", choices=("auto", "series", "cms"), default="auto")
    sv.add_argument("--campaign", choices=sorted(CAMPAIGNS), help="run a named campaign instead")
    sv.set_defaults(func=cmd_verify)

    sc = sub.add_parser("crossover", parents=[common], help="Pareto/Gaussian crossover points")
    sc.add_argument("--alpha-list", type=float, nargs="+", help="several alpha values")
    sc.add_argument("--preset", choices=sorted(B.PRESETS), default="upper")
    sc.add_argument("--pareto-coeff", type=float, help="override A")
    sc.add_argument("--gauss-coeff", type=float, help="override B")
    sc.add_argument("--kappa", type=float, help="override kappa")
    sc.set_defaults(func=cmd_crossover)

    sd = sub.add_parser("density", parents=[common], help="symmetric density: series vs inversion")
    sd.add_argument("--x", type=float, nargs="+")
    sd.add_argument("--x-grid", help="lin:a:b:n or log:a:b:n (default lin:-5:5:21)")
    sd.add_argument("--sin-convention", choices=("standard", "printed"), default="standard")
    sd.set_defaults(func=cmd_density)

    sk = sub.add_parser("constants", parents=[common], help="parametrisation and tail constants")
    sk.set_defaults(func=cmd_constants)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.beta is None:
        args.beta = 0 if args.command == "density" else 1
    try:
        return args.func(args)
    except (UsageError, DomainError, ConfigurationError) as exc:
        print(f"stable-tails: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QuadratureError, RootNotFoundError, SeriesDomainError) as exc:
        print(f"stable-tails: numerical failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
