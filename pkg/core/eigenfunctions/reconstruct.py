"""
Cartesian eigenfunctions of every separable system.

Each eigenfunction is a class prefactor x^mu (or a phase (x_a + i x_b)^|m|)
times a product over polynomial roots z_k of quadratic forms that are
homogeneous of degree 2, optionally times homogenised Gegenbauer, Legendre or
Jacobi factors. Everything is expanded term by term in sparse form.
"""

from typing import Callable, Dict, Sequence

import numpy as np
from numpy.polynomial import polynomial as P

from core.models import QuantumState
from core.numerics import classical_coefficients
from core.utils.exceptions import MissingRoots
from logger import Logger

from .polynomial import (
    HomogPoly,
    classify_symmetry,
    homogenize,
    laplacian,
    monomial,
    phase_part,
)


def _confocal_factor(nvars: int, axes: Sequence[float], z: float, offset: int = 0) -> HomogPoly:
    """sum_i x_{i+offset}^2 prod_{j != i} (z - axes_j)."""
    terms = {}
    for i in range(len(axes)):
        weight = float(np.prod([z - axes[j] for j in range(len(axes)) if j != i]))
        exp = [0] * nvars
        exp[i + offset] = 2
        terms[tuple(exp)] = weight
    return HomogPoly(nvars, 2, terms)


def _root_product(nvars: int, roots: Sequence[float], factor: Callable[[float], HomogPoly]) -> HomogPoly:
    result = HomogPoly.constant(nvars)
    for z in roots:
        result = result * factor(float(z))
    return result


def heun_roots(state: QuantumState) -> np.ndarray:
    """Real roots of the stored Heun polynomial."""
    if state.coefficients is None:
        raise MissingRoots(f"{state.system} state {state.key} carries no Heun coefficients")
    coef = np.asarray(state.coefficients, dtype=float)
    if len(coef) <= 1:
        return np.empty(0)
    return np.sort(P.polyroots(coef).real)


def _ellipsoidal(state: QuantumState) -> HomogPoly:
    d = (state.degree - sum(state.mu)) // 2
    if d > 0 and (state.roots is None or len(state.roots) != d):
        raise MissingRoots(f"Ellipsoidal state {state.key} needs {d} roots")
    e = state.shape
    body = _root_product(4, state.roots or (), lambda z: _confocal_factor(4, e, z))
    return monomial(4, state.mu) * body


def _prolate(state: QuantumState) -> HomogPoly:
    a = state.shape[2]
    r2 = HomogPoly.radius_squared(4)
    x1sq = HomogPoly.radius_squared(4, [0])
    x4sq = HomogPoly.radius_squared(4, [3])

    def factor(z: float) -> HomogPoly:
        return r2 - x1sq * (1.0 / z) + x4sq * ((a - 1.0) / (z - a))

    b1, b4 = state.symmetry
    prefactor = monomial(4, (b1, 0, 0, b4)) * phase_part(4, 1, 2, state.numbers["m"])
    return prefactor * _root_product(4, heun_roots(state), factor)


def _oblate(state: QuantumState) -> HomogPoly:
    a = state.shape[2]
    r2 = HomogPoly.radius_squared(4)
    x1sq = HomogPoly.radius_squared(4, [0])
    x2sq = HomogPoly.radius_squared(4, [1])

    def factor(z: float) -> HomogPoly:
        return r2 - x1sq * (a / z) - x2sq * ((a - 1.0) / (z - 1.0))

    b1, b2 = state.symmetry
    prefactor = monomial(4, (b1, b2, 0, 0)) * phase_part(4, 2, 3, state.numbers["m"])
    return prefactor * _root_product(4, heun_roots(state), factor)


def _lame(state: QuantumState) -> HomogPoly:
    n, d = state.numbers["n"], state.numbers["d"]
    bits = state.symmetry[1:]
    axes = state.shape
    gegenbauer = classical_coefficients("gegenbauer", n, u=2 * d + 1 + sum(bits))
    radial = homogenize(gegenbauer, 4, 0, HomogPoly.radius_squared(4))
    body = _root_product(4, heun_roots(state), lambda z: _confocal_factor(4, axes, z, offset=1))
    return monomial(4, (0, *bits)) * radial * body


def _s2_ellipsoidal(state: QuantumState) -> HomogPoly:
    axes = state.shape
    body = _root_product(3, heun_roots(state), lambda z: _confocal_factor(3, axes, z))
    return monomial(3, state.symmetry) * body


def _legendre_part(nvars: int, index: int, ell: int, m: int, radius_sq: HomogPoly) -> HomogPoly:
    """R^(l-|m|) (d/dt)^|m| P_l (x_index / R)."""
    k = abs(m)
    coef = classical_coefficients("assoc_legendre", ell, m=k)[: ell - k + 1]
    return homogenize(coef, nvars, index, radius_sq)


def _spherical(state: QuantumState) -> HomogPoly:
    n, ell, m = state.numbers["n"], state.numbers["l"], state.numbers["m"]
    gegenbauer = classical_coefficients("gegenbauer", n, u=ell + 1.0)
    radial = homogenize(gegenbauer, 4, 0, HomogPoly.radius_squared(4))
    harmonic = _legendre_part(4, 1, ell, m, HomogPoly.radius_squared(4, [1, 2, 3]))
    return radial * harmonic * phase_part(4, 2, 3, m)


def _cylindrical(state: QuantumState) -> HomogPoly:
    d, m1, m2 = state.numbers["d"], state.numbers["m1"], state.numbers["m2"]
    jacobi = classical_coefficients("jacobi", d, alpha=float(abs(m1)), beta=float(abs(m2)))
    r2 = HomogPoly.radius_squared(4)
    t = HomogPoly.radius_squared(4, [2, 3]) - HomogPoly.radius_squared(4, [0, 1])
    body = HomogPoly(4, 2 * d)
    for j, c in enumerate(jacobi):
        if c != 0.0:
            body = body + (t**j) * (r2 ** (d - j)) * c
    return phase_part(4, 0, 1, m1) * phase_part(4, 2, 3, m2) * body


def _s2_spherical(state: QuantumState) -> HomogPoly:
    ell, m = state.numbers["l"], state.numbers["m"]
    return phase_part(3, 1, 2, m) * _legendre_part(3, 0, ell, m, HomogPoly.radius_squared(3))


BUILDERS: Dict[str, Callable[[QuantumState], HomogPoly]] = {
    "Ellipsoidal": _ellipsoidal,
    "Prolate": _prolate,
    "Oblate": _oblate,
    "Lame": _lame,
    "Spherical23": _spherical,
    "Cylindrical": _cylindrical,
    "S2Ellipsoidal": _s2_ellipsoidal,
    "S2Spherical": _s2_spherical,
}


def reconstruct(state: QuantumState) -> HomogPoly:
    """
    Expand the eigenfunction of a computed state as a homogeneous polynomial.

    Args:
        state: A state produced by one of the spectrum solvers

    Returns:
        HomogPoly of degree D scaled to unit leading coefficient

    Raises:
        MissingRoots: If the state lacks the roots or coefficients its system needs
    """
    poly = BUILDERS[state.system](state).prune()
    if poly.degree != state.degree:
        raise MissingRoots(f"Reconstructed degree {poly.degree} differs from D={state.degree} for {state.key}")
    Logger.debug(f"{state.system} {state.key}: {len(poly)} terms", "[Reconstruct]")
    return poly.normalized()


def verification_report(state: QuantumState, poly: HomogPoly) -> Dict[str, object]:
    """Degree, harmonicity residual and parity bits of a reconstructed eigenfunction."""
    residual = laplacian(poly).norm() / max(poly.norm(), 1e-300)
    return {
        "degree": poly.degree,
        "expected_degree": state.degree,
        "harmonic_residual": residual,
        "parity": list(classify_symmetry(poly)),
        "expected_parity": list(state.mu),
        "terms": len(poly),
    }
