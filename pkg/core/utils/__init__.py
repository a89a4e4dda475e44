"""Utilities module for config validation and the shared exception hierarchy."""

from .config_validator import ConfigValidator
from .exceptions import (
    SeparableError,
    ValidationError,
    NumericalError,
    InvalidProblem,
    OutOfBox,
    SingularStratum,
    UnreachableTarget,
    DimensionGuard,
    MissingRoots,
    NonConvergence,
    ComplexSpectrum,
    NoConvergence,
    TruncationViolated,
    DegenerateT,
    NoConsistentMap,
    OutsideImage,
    MixedParity,
    AmbiguousMatch,
    LeftLattice,
)

__all__ = [
    "ConfigValidator",
    "SeparableError",
    "ValidationError",
    "NumericalError",
    "InvalidProblem",
    "OutOfBox",
    "SingularStratum",
    "UnreachableTarget",
    "DimensionGuard",
    "MissingRoots",
    "NonConvergence",
    "ComplexSpectrum",
    "NoConvergence",
    "TruncationViolated",
    "DegenerateT",
    "NoConsistentMap",
    "OutsideImage",
    "MixedParity",
    "AmbiguousMatch",
    "LeftLattice",
]
