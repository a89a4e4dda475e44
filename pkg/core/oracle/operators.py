"""
Commuting integrals as matrices on homogeneous polynomials.

Every integral is a weighted sum of squared angular momenta
l_ij^2 = -(x_i d_j - x_j d_i)^2, built at hbar = 1. Matrices act on the
coefficient vectors of degree-D monomials in the basis of monomial_basis.
"""

from typing import Dict, List, Literal, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.linalg import null_space

from core.eigenfunctions import (
    HomogPoly,
    coefficient_vector,
    fischer_weight,
    laplacian,
    monomial_basis,
)
from core.models import SystemSpec
from core.utils.exceptions import DimensionGuard

MAX_ORACLE_DEGREE = 12

Weights = Dict[Tuple[int, int], float]
Which = Literal["first", "second"]


class OperatorMatrix(BaseModel):
    """Dense matrix of one integral on the degree-D monomials."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    system: str
    which: str
    degree: int
    nvars: int
    basis: List[Tuple[int, ...]]
    entries: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.basis)


def _casimir(nvars: int) -> Weights:
    return {(i, j): 1.0 for i in range(nvars) for j in range(i + 1, nvars)}


def operator_weights(spec: SystemSpec) -> Tuple[Weights, Weights]:
    """
    Weights of l_ij^2 in the two integrals of a system (0-based axes).

    Returns:
        Tuple (first, second)
    """
    p = spec.params
    if spec.kind == "Ellipsoidal":
        first, second = {}, {}
        for i in range(4):
            for j in range(i + 1, 4):
                rest = [p[k] for k in range(4) if k not in (i, j)]
                first[(i, j)] = float(sum(rest))
                second[(i, j)] = float(np.prod(rest))
        return first, second
    if spec.kind == "Prolate":
        a = p[0]
        return {(0, 1): a, (0, 2): a, (0, 3): 1.0}, {(1, 2): 1.0}
    if spec.kind == "Oblate":
        a = p[0]
        return {(0, 1): a, (0, 2): 1.0, (0, 3): 1.0}, {(2, 3): 1.0}
    if spec.kind == "Lame":
        f1, f2, f3 = p
        return {(0, 1): 1.0, (0, 2): 1.0, (0, 3): 1.0}, {(2, 3): f1, (1, 3): f2, (1, 2): f3}
    if spec.kind == "Spherical23":
        return {(0, 1): 1.0, (0, 2): 1.0, (0, 3): 1.0}, {(2, 3): 1.0}
    if spec.kind == "Cylindrical":
        return {(0, 1): 1.0}, {(2, 3): 1.0}
    if spec.kind == "S2Ellipsoidal":
        e1, e2, e3 = p
        return _casimir(3), {(0, 1): e3, (0, 2): e2, (1, 2): e1}
    return _casimir(3), {(1, 2): 1.0}


def rotate(p: HomogPoly, i: int, j: int) -> HomogPoly:
    """(x_i d_j - x_j d_i) p."""
    xi = HomogPoly.variable(p.nvars, i)
    xj = HomogPoly.variable(p.nvars, j)
    return xi * p.derivative(j) - xj * p.derivative(i)


def apply_operator(weights: Weights, p: HomogPoly) -> HomogPoly:
    """sum_ij w_ij l_ij^2 p."""
    result = HomogPoly(p.nvars, p.degree)
    for (i, j), w in weights.items():
        if w != 0.0:
            result = result - rotate(rotate(p, i, j), i, j) * w
    return result


def build_operator(spec: SystemSpec, which: Which, degree: int) -> OperatorMatrix:
    """
    Matrix of the first or second integral on degree-D monomials.

    Raises:
        DimensionGuard: If D exceeds MAX_ORACLE_DEGREE
    """
    if degree > MAX_ORACLE_DEGREE:
        raise DimensionGuard(f"Operator matrices are limited to D <= {MAX_ORACLE_DEGREE}, got {degree}")
    weights = operator_weights(spec)[0 if which == "first" else 1]
    basis = monomial_basis(spec.nvars, degree)
    entries = np.zeros((len(basis), len(basis)))
    for k, exp in enumerate(basis):
        image = apply_operator(weights, HomogPoly(spec.nvars, degree, {exp: 1.0}))
        entries[:, k] = coefficient_vector(image, basis)
    return OperatorMatrix(
        system=spec.kind, which=which, degree=degree, nvars=spec.nvars, basis=basis, entries=entries
    )


def laplacian_matrix(nvars: int, degree: int) -> np.ndarray:
    """Laplacian from degree-D to degree-(D-2) coefficient vectors."""
    basis = monomial_basis(nvars, degree)
    if degree < 2:
        return np.zeros((0, len(basis)))
    target = monomial_basis(nvars, degree - 2)
    matrix = np.zeros((len(target), len(basis)))
    for k, exp in enumerate(basis):
        matrix[:, k] = coefficient_vector(laplacian(HomogPoly(nvars, degree, {exp: 1.0})), target)
    return matrix


def fischer_scale(nvars: int, degree: int) -> np.ndarray:
    """sqrt(a!) per basis monomial; in these coordinates every l_ij^2 is symmetric."""
    return np.sqrt([fischer_weight(exp) for exp in monomial_basis(nvars, degree)])


def harmonic_subspace(degree: int, nvars: int = 4, weighted: bool = False) -> np.ndarray:
    """
    Orthonormal basis of the kernel of the Laplacian on degree-D polynomials.

    Args:
        degree: Total degree D
        nvars: 4 on S^3, 3 on S^2
        weighted: Orthonormal for the Fischer product (columns in sqrt(a!)-scaled
            coordinates) instead of the plain coefficient product

    Returns:
        Matrix with (D+1)^2 columns for 4 variables, 2D+1 for 3
    """
    n = len(monomial_basis(nvars, degree))
    if degree < 2:
        return np.eye(n)
    lap = laplacian_matrix(nvars, degree)
    if weighted:
        lap = (lap / fischer_scale(nvars, degree)) * fischer_scale(nvars, degree - 2)[:, None]
    return null_space(lap)
