"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class DiracError(Exception):
    """Base class for every error raised by this package."""


class DomainError(DiracError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PreconditionError(DiracError, ValueError):
    """A documented precondition of an operation does not hold."""


class ComplexIndexError(DiracError):
    """The effective angular index (delta or eta) is not real."""


class NoRealSolution(DiracError):
    """The energy condition has no real root.

    The offending discriminant is stored on ``discriminant``.
    """

    def __init__(self, message: str, discriminant: float | None = None):
        super().__init__(message)
        self.discriminant = discriminant


class BranchError(DiracError):
    """No admissible Nikiforov-Uvarov branch exists for the given coefficients."""


class SingularDenominator(DiracError):
    """A coupling denominator vanishes at ``radius``."""

    def __init__(self, message: str, radius: float):
        super().__init__(message)
        self.radius = radius


class SingularPotential(SingularDenominator):
    """U-(r) or U+(r) crosses zero inside the integration window."""


class StiffnessError(DiracError):
    """The fixed-step integrator produced non-finite values."""


class BracketError(DiracError):
    """No eigenvalue with the requested node count lies in the bracket."""


class AmbiguousBracket(DiracError):
    """More than one eigenvalue with the requested node count lies in the bracket."""
