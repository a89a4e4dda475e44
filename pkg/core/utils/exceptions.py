"""Exception hierarchy shared by every package.

Validation errors map to CLI exit code 2, numerical failures to exit code 3.
"""

from typing import Optional, Tuple


class SeparableError(Exception):
    """Base class for all errors raised by the toolkit."""

    exit_code: int = 1


class ValidationError(SeparableError, ValueError):
    """Input or configuration rejected before any computation."""

    exit_code = 2


class NumericalError(SeparableError, RuntimeError):
    """A numerical procedure failed or produced an inconsistent result."""

    exit_code = 3


class InvalidProblem(ValidationError):
    pass


class OutOfBox(ValidationError):
    pass


class SingularStratum(ValidationError):
    pass


class UnreachableTarget(ValidationError):
    pass


class DimensionGuard(ValidationError):
    pass


class MissingRoots(ValidationError):
    pass


class NonConvergence(NumericalError):
    """Root system did not converge; carries the occupancy that failed."""

    def __init__(self, message: str, occupancy: Optional[Tuple[int, ...]] = None):
        super().__init__(message)
        self.occupancy = occupancy

    def __str__(self) -> str:
        base = super().__str__()
        if self.occupancy is not None:
            return f"{base} (occupancy={self.occupancy})"
        return base


class ComplexSpectrum(NumericalError):
    pass


class NoConvergence(NumericalError):
    pass


class TruncationViolated(NumericalError):
    pass


class DegenerateT(NumericalError):
    pass


class NoConsistentMap(NumericalError):
    pass


class OutsideImage(NumericalError):
    pass


class MixedParity(NumericalError):
    pass


class AmbiguousMatch(NumericalError):
    pass


class LeftLattice(NumericalError):
    pass
