"""Typed errors and warnings shared by all spiralmap modules.

Domain violations raise instead of returning NaN payloads, so certifiers
can distinguish "input outside the domain" from "claim violated".
"""


class SpiralmapError(Exception):
    """Base class for all spiralmap errors."""


class DomainError(SpiralmapError, ValueError):
    """Input lies outside the mathematical domain of an operation."""


class ParameterError(SpiralmapError, ValueError):
    """Construction parameters violate their admissible ranges."""


class SearchExhaustedError(SpiralmapError):
    """No admissible offset A found below the search cap (inconsistent inputs)."""


class DegenerateDenominatorError(SpiralmapError):
    """Dilatation denominator vanished; the offset A was chosen too small."""


class StepTooCoarseError(SpiralmapError):
    """A winding-number step exceeded pi/2; rerun with more samples."""


class RootBracketError(SpiralmapError):
    """Level-curve root finding could not bracket a solution in the region."""


class ConfigError(SpiralmapError, ValueError):
    """Malformed or inconsistent run configuration."""


class GridBoundaryWarning(UserWarning):
    """The supremum witness sits on the outermost grid ring; grid may be too coarse."""


class BudgetExhaustedWarning(UserWarning):
    """Estimator budget ran out before refinement stabilized to 1%."""


class InsufficientPairsWarning(UserWarning):
    """A separation case received fewer than 100 sampled pairs."""
