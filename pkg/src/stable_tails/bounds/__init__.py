"""Closed-form tail bounds, the characteristic-function bound and the crossover solver."""

from .specs import (
    LEFT,
    LOWER,
    RIGHT,
    UPPER,
    VAR_BIG,
    VAR_SMALL,
    VAR_X,
    BoundEvaluation,
    TailBoundSpec,
    evaluate,
    evaluate_or_refuse,
    get_spec,
    list_specs,
)
from .theorems import (
    ASYM12_LEFT_IDS,
    ASYM12_RIGHT_IDS,
    SYM12_IDS,
    asym01_lower,
    asym01_upper,
    asym12_left,
    asym12_right,
    left_large_exponent,
    sym12,
    sym_bounds_01,
)
from .lemmas import LEMMA_GROUPS, asym_jump_constant, lemma_bounds, sym_jump_constant
from .tilt import ExponentialTilt, t_tilde_y, t_y, t_y_residual, tilt_exponent_A
from .kallenberg import KallenbergChain, kallenberg_bound, kallenberg_chain
from .crossover import (
    LOWER_PRESET,
    PRESETS,
    UPPER_PRESET,
    CrossoverResult,
    crossover,
    reduced_bracket,
    reduced_root,
    reference_scale,
)

__all__ = [
    "LEFT", "LOWER", "RIGHT", "UPPER", "VAR_BIG", "VAR_SMALL", "VAR_X",
    "BoundEvaluation", "TailBoundSpec", "evaluate", "evaluate_or_refuse", "get_spec", "list_specs",
    "ASYM12_LEFT_IDS", "ASYM12_RIGHT_IDS", "SYM12_IDS",
    "asym01_lower", "asym01_upper", "asym12_left", "asym12_right", "left_large_exponent", "sym12", "sym_bounds_01",
    "LEMMA_GROUPS", "asym_jump_constant", "lemma_bounds", "sym_jump_constant",
    "ExponentialTilt", "t_tilde_y", "t_y", "t_y_residual", "tilt_exponent_A",
    "KallenbergChain", "kallenberg_bound", "kallenberg_chain",
    "LOWER_PRESET", "PRESETS", "UPPER_PRESET", "CrossoverResult", "crossover",
    "reduced_bracket", "reduced_root", "reference_scale",
]
