"""Exception and warning types shared across the package."""


class StableTailsError(Exception):
    """Base class for errors raised by stable_tails."""


class DomainError(StableTailsError, ValueError):
    """A parameter lies outside the region where a formula is defined."""


class ConfigurationError(StableTailsError, ValueError):
    """A sampler or campaign was configured inconsistently."""


class RegimeError(DomainError):
    """A tail bound was evaluated outside its validity region."""


class QuadratureError(StableTailsError, RuntimeError):
    """Numerical integration failed to reach its tolerance."""


class SeriesDomainError(StableTailsError, ArithmeticError):
    """A density series diverged numerically; use the inversion route instead."""


class RootNotFoundError(StableTailsError, RuntimeError):
    """Bracketing failed to find a sign change."""


class TruncationWarning(UserWarning):
    """A series sampler hit ``max_terms`` before meeting its tolerance."""
