"""Symmetry sublattices and semi-toric polygon projections of action maps."""

from typing import Literal, Optional, Sequence, Tuple

import numpy as np

from core.models import ActionTriple, JointSpectrum
from core.utils.exceptions import InvalidProblem

Axis = Literal["J1", "J3"]

# systems with a global circle action; the first scaled value is its signed momentum
CIRCLE_ACTION_SYSTEMS = ("Prolate", "Oblate", "Spherical23", "Cylindrical")


def combined_classes(degree: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """The two (mu1, mu4) classes sharing the parity of |m| at this degree."""
    if degree % 2 == 0:
        return (0, 0), (1, 1)
    return (1, 0), (0, 1)


def sublattice(
    spectrum: JointSpectrum, combined: bool = True, single: Optional[Sequence[int]] = None
) -> JointSpectrum:
    """
    States of a prolate-type spectrum forming one regular lattice.

    Args:
        spectrum: Two-bit classed spectrum (Prolate or Oblate)
        combined: Merge the two classes of equal m parity
        single: The class to keep when combined is False (defaults to the first combined class)
    """
    classes = combined_classes(spectrum.degree)
    if combined:
        return spectrum.filter_classes(classes)
    return spectrum.filter_classes([tuple(single) if single is not None else classes[0]])


def polygon_projection(spectrum: JointSpectrum, actions: Sequence[ActionTriple], axis: Axis = "J1") -> np.ndarray:
    """
    Project action triples onto (m, J_axis) with the signed momentum m.

    Projecting onto J1 or J3 gives the two representatives of the
    semi-toric polygon.

    Returns:
        (N, 2) array in the state order of the spectrum

    Raises:
        InvalidProblem: If the system has no global circle action or the lengths differ
    """
    if spectrum.system not in CIRCLE_ACTION_SYSTEMS:
        raise InvalidProblem(f"{spectrum.system} has no signed angular momentum")
    if len(actions) != len(spectrum.states):
        raise InvalidProblem(f"{len(actions)} action triples for {len(spectrum.states)} states")
    if axis not in ("J1", "J3"):
        raise InvalidProblem(f"Projection axis must be J1 or J3, got '{axis}'")
    m = np.array([s.scaled[0] for s in spectrum.states], dtype=float)
    j = np.array([getattr(t, axis) for t in actions], dtype=float)
    return np.column_stack([m, j]).reshape(-1, 2)
