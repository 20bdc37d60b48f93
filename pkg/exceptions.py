"""
Exception hierarchy for the nonlocal diffusion toolkit.

Numerical routines raise these instead of returning sentinel values, so the
CLI can map them to exit codes and callers can recover partial results.
"""
from typing import Optional


class NonlocalDiffusionError(Exception):
    """Base class for every error raised by the toolkit."""


class DomainError(NonlocalDiffusionError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class QuadratureError(NonlocalDiffusionError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, message: str, partial: float, abserr: float):
        super().__init__(f"{message} (partial={partial:.6e}, abserr={abserr:.3e})")
        self.partial = partial
        self.abserr = abserr


class MittagLefflerOverflowError(NonlocalDiffusionError, OverflowError):
    """Mittag-Leffler evaluation overflowed on the positive real axis."""


class SeriesTruncationError(NonlocalDiffusionError):
    """A series did not converge within its term budget."""

    def __init__(self, message: str, partial: float):
        super().__init__(f"{message} (partial={partial:.6e})")
        self.partial = partial


class CrossCheckError(NonlocalDiffusionError):
    """Two independent evaluation routes disagree beyond tolerance."""

    def __init__(self, message: str, first: float, second: float):
        super().__init__(f"{message} ({first:.12e} vs {second:.12e})")
        self.first = first
        self.second = second


class NormalizationError(NonlocalDiffusionError):
    """A density that must integrate to one does not."""


class InversionQualityError(NonlocalDiffusionError):
    """A tabulated inverse transform violates monotonicity."""


class DensityReconstructionError(NonlocalDiffusionError):
    """A density rebuilt from its characteristic function has too much negative ripple."""


class BoundaryMassError(NonlocalDiffusionError):
    """A solution carries too much density at the edge of the periodic grid."""


class AssemblyError(NonlocalDiffusionError):
    """The discrete bounded-domain operator is not symmetric enough."""


class PositivityError(NonlocalDiffusionError):
    """A discrete operator that must be positive has a negative eigenvalue."""


class LowerBoundViolationError(NonlocalDiffusionError):
    """A kernel falls below its power-law lower bound inside the horizon."""

    def __init__(self, message: str, x: Optional[float] = None):
        super().__init__(message if x is None else f"{message} at x={x:.6e}")
        self.x = x


class StrictModeError(NonlocalDiffusionError):
    """A diagnostic warning escalated to an error by strict mode."""


class ConfigError(NonlocalDiffusionError, ValueError):
    """A run configuration file cannot be read or parsed."""
