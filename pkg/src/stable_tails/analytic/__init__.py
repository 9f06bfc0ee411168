"""Characteristic functions, residual-series moments, envelopes and densities."""

from .asymptotics import asymptotic_left_rate, kappa_alpha
from .cf import SPLIT_INNER, SPLIT_OUTER, STABLE_CANONICAL, CharFn, cf_eval, unit_integrals
from .density import DensityModel, SeriesValue, density_inversion, density_series, inversion_mass
from .envelopes import REGIMES, LaplaceEnvelope, laplace_envelope, x1_laplace_exponent
from .x1_tail import X1Tail, x1_log_laplace, x1_tail_probability
from .residual import ResidualSummary, mgf_S, residual_exponent, residual_summary

__all__ = [
    "CharFn",
    "cf_eval",
    "unit_integrals",
    "STABLE_CANONICAL",
    "SPLIT_INNER",
    "SPLIT_OUTER",
    "ResidualSummary",
    "residual_summary",
    "residual_exponent",
    "mgf_S",
    "LaplaceEnvelope",
    "laplace_envelope",
    "x1_laplace_exponent",
    "REGIMES",
    "DensityModel",
    "SeriesValue",
    "density_series",
    "density_inversion",
    "inversion_mass",
    "asymptotic_left_rate",
    "kappa_alpha",
    "X1Tail",
    "x1_log_laplace",
    "x1_tail_probability",
]
