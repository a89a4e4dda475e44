"""Eigenfunctions as homogeneous harmonic polynomials."""

from .polynomial import (
    HomogPoly,
    laplacian,
    classify_symmetry,
    monomial_basis,
    coefficient_vector,
    from_coefficients,
    sphere_moment,
    sphere_gram,
    sphere_inner,
    fischer_weight,
    fischer_inner,
    homogenize,
    phase_part,
    to_text,
)
from .reconstruct import reconstruct, heun_roots, verification_report

__all__ = [
    "HomogPoly",
    "laplacian",
    "classify_symmetry",
    "monomial_basis",
    "coefficient_vector",
    "from_coefficients",
    "sphere_moment",
    "sphere_gram",
    "sphere_inner",
    "fischer_weight",
    "fischer_inner",
    "homogenize",
    "phase_part",
    "to_text",
    "reconstruct",
    "heun_roots",
    "verification_report",
]
