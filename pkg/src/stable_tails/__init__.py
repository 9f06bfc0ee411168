"""Tail bounds for alpha-stable laws with samplers and Monte Carlo verification.

Subpackages: :mod:`~stable_tails.sampler` (series, CMS and compound-Poisson
draws), :mod:`~stable_tails.analytic` (characteristic functions, envelopes,
densities), :mod:`~stable_tails.bounds` (closed-form tail bounds) and
:mod:`~stable_tails.verify` (checking bounds against samples).
"""

from .core import (
    ASYMMETRIC,
    SYMMETRIC,
    AsymptoticConstants,
    LevyCanonical,
    StableParams,
    c_alpha,
    check_alpha,
    constants,
    from_levy,
    to_levy,
)
from .errors import (
    ConfigurationError,
    DomainError,
    QuadratureError,
    RegimeError,
    RootNotFoundError,
    SeriesDomainError,
    StableTailsError,
    TruncationWarning,
)

__version__ = "0.1.0"

__all__ = [
    "ASYMMETRIC",
    "SYMMETRIC",
    "AsymptoticConstants",
    "LevyCanonical",
    "StableParams",
    "c_alpha",
    "check_alpha",
    "constants",
    "from_levy",
    "to_levy",
    "ConfigurationError",
    "DomainError",
    "QuadratureError",
    "RegimeError",
    "RootNotFoundError",
    "SeriesDomainError",
    "StableTailsError",
    "TruncationWarning",
    "__version__",
]
