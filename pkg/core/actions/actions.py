"""
Classical actions of the separable systems on S^3.

Every quadrature action is (2/pi) times the integral of p over one window of
a separated coordinate, where p^2 is a quadratic numerator over the product
of the pole factors. The arguments are the hbar-scaled eigenvalues, so the
three actions add up to sqrt(E~).
"""

from typing import Literal, Sequence

import numpy as np

from core.geometry import normalized_axes
from core.models import ActionTriple, QuantumState, SystemSpec
from core.spectra.ellipsoidal import separation_constants
from core.utils.exceptions import InvalidProblem, OutsideImage

from .windows import turning_points, window_action

EtildeMode = Literal["unit", "exact"]

# relative tolerance for eigenvalues sitting on an edge of the action triangle
EDGE_TOL = 1e-10


def _triple(j1: float, j2: float, j3: float) -> ActionTriple:
    try:
        return ActionTriple(J1=j1, J2=j2, J3=j3)
    except ValueError as e:
        raise OutsideImage(f"Negative action in ({j1:.3e}, {j2:.3e}, {j3:.3e})") from e


def actions_ellipsoidal(e: Sequence[float], etilde: float, lam1: float, lam2: float) -> ActionTriple:
    """
    Actions of the ellipsoidal system.

    p^2 = (-E~ z^2 + lam1 z - lam2) / (4 prod_j (z - e_j)), integrated over
    [e1, min(R1, e2)], [max(R1, e2), min(R2, e3)] and [max(R2, e3), e4] with
    R1 <= R2 the turning points.

    Raises:
        OutsideImage: If (lam1, lam2) lies outside the momentum map image
    """
    e1, e2, e3, e4 = (float(v) for v in e)
    r1, r2 = turning_points(-etilde, lam1, -lam2)

    def p_squared(z):
        return (-etilde * z * z + lam1 * z - lam2) / (4.0 * (z - e1) * (z - e2) * (z - e3) * (z - e4))

    return _triple(
        window_action(p_squared, e1, min(r1, e2)),
        window_action(p_squared, max(r1, e2), min(r2, e3)),
        window_action(p_squared, max(r2, e3), e4),
    )


def actions_prolate(a: float, etilde: float, m: float, lam: float) -> ActionTriple:
    """
    Actions of the prolate system; J2 = |m| exactly.

    Raises:
        OutsideImage: If (m, lam) lies outside the momentum map image
    """
    m2 = m * m
    r1, r2 = turning_points(-etilde, lam + etilde + (a - 1.0) * m2, -lam)

    def p_squared(s):
        return (-etilde * s * s + (lam + etilde + (a - 1.0) * m2) * s - lam) / (4.0 * s * (s - 1.0) ** 2 * (s - a))

    return _triple(
        window_action(p_squared, 0.0, min(r1, 1.0)),
        abs(m),
        window_action(p_squared, max(1.0, r2), a),
    )


def actions_oblate(a: float, etilde: float, m: float, lam: float) -> ActionTriple:
    """
    Actions of the oblate system; J3 = |m| exactly.

    Raises:
        OutsideImage: If (m, lam) lies outside the momentum map image
    """
    m2 = m * m
    linear = etilde * a + lam - (a - 1.0) * m2
    r1, r2 = turning_points(-etilde, linear, -a * lam)

    def p_squared(s):
        return (-etilde * s * s + linear * s - a * lam) / (4.0 * s * (s - 1.0) * (s - a) ** 2)

    return _triple(
        window_action(p_squared, 0.0, min(r1, 1.0)),
        window_action(p_squared, max(r1, 1.0), min(r2, a)),
        abs(m),
    )


def actions_lame(f: Sequence[float], etilde: float, fval: float, g: float) -> ActionTriple:
    """
    Actions of the Lame system with axes f = (f1, f2, f3).

    J1 = sqrt(E~) - sqrt(E~ - f) in closed form; J2 and J3 come from
    p^2 = ((f - E~) s + g') / (4 s (s - 1) (s - a)) in the normalised axes
    (0, 1, a), g' being g mapped to those axes. The turning point is
    r = g' / (E~ - f).

    Raises:
        OutsideImage: If f > E~ or g is outside the image
    """
    spec = SystemSpec(kind="Lame", params=tuple(float(v) for v in f))
    (_, _, a), offset, scale = normalized_axes(spec)
    rest = etilde - fval
    tol = EDGE_TOL * max(1.0, etilde)
    if rest < -tol:
        raise OutsideImage(f"f = {fval:.6g} exceeds E~ = {etilde:.6g}")
    rest = max(rest, 0.0)
    j1 = np.sqrt(etilde) - np.sqrt(rest)
    if rest < tol:
        return _triple(j1, 0.0, 0.0)

    g_norm = (g - offset * rest) / scale
    r = g_norm / rest

    def p_squared(s):
        return (-rest * s + g_norm) / (4.0 * s * (s - 1.0) * (s - a))

    return _triple(
        j1,
        window_action(p_squared, 0.0, min(r, 1.0)),
        window_action(p_squared, max(1.0, r), a),
    )


def actions_spherical(etilde: float, f: float, m: float) -> ActionTriple:
    """Closed form (sqrt(E~) - sqrt(E~ - f), sqrt(E~ - f) - |m|, |m|)."""
    if f > etilde + EDGE_TOL * max(1.0, etilde):
        raise OutsideImage(f"f = {f:.6g} exceeds E~ = {etilde:.6g}")
    inner = np.sqrt(max(etilde - f, 0.0))
    return _triple(np.sqrt(etilde) - inner, inner - abs(m), abs(m))


def actions_cylindrical(etilde: float, m1: float, m2: float) -> ActionTriple:
    """Closed form (|m1|, sqrt(E~) - |m1| - |m2|, |m2|)."""
    return _triple(abs(m1), np.sqrt(etilde) - abs(m1) - abs(m2), abs(m2))


def _sqrt_difference(total: float, inner: float) -> float:
    """Quadrature of p^2 = (T (1 - s) - I) / (4 s (1 - s)^2) over [0, 1 - I/T]; equals sqrt(T) - sqrt(I)."""
    if total <= 0.0:
        return 0.0

    def p_squared(s):
        return (total * (1.0 - s) - inner) / (4.0 * s * (1.0 - s) ** 2)

    return window_action(p_squared, 0.0, 1.0 - inner / total)


def spherical_quadrature(etilde: float, f: float, m: float) -> ActionTriple:
    """actions_spherical evaluated by quadrature of the separated momenta."""
    rest = max(etilde - f, 0.0)
    return _triple(_sqrt_difference(etilde, rest), _sqrt_difference(rest, m * m), abs(m))


def cylindrical_quadrature(etilde: float, m1: float, m2: float) -> ActionTriple:
    """actions_cylindrical with J2 evaluated by quadrature of the separated momentum."""
    linear = etilde + m1 * m1 - m2 * m2
    r1, r2 = turning_points(-etilde, linear, -m1 * m1)

    def p_squared(s):
        return (-etilde * s * s + linear * s - m1 * m1) / (4.0 * s * s * (1.0 - s) ** 2)

    j2 = window_action(p_squared, max(r1, 0.0), min(r2, 1.0))
    return _triple(abs(m1), j2, abs(m2))


def focus_focus_actions(a: float) -> ActionTriple:
    """Image of the prolate focus-focus value (m, lambda) = (0, 1) at E~ = 1."""
    if not a > 1.0:
        raise InvalidProblem(f"Prolate requires a > 1, got {a}")
    angle = np.arcsin(1.0 / np.sqrt(a))
    return _triple(2.0 / np.pi * angle, 0.0, 2.0 / np.pi * (0.5 * np.pi - angle))


def state_etilde(state: QuantumState, etilde_mode: EtildeMode = "unit") -> float:
    """E~ = 1 (plotting convention) or the exact hbar^2 E = 1 - hbar^2."""
    if etilde_mode == "unit":
        return 1.0
    if etilde_mode == "exact":
        return 1.0 - state.hbar**2
    raise InvalidProblem(f"Unknown etilde mode '{etilde_mode}'")


def state_actions(spec: SystemSpec, state: QuantumState, etilde_mode: EtildeMode = "unit") -> ActionTriple:
    """
    Actions of one quantum state from its scaled eigenvalues.

    Raises:
        InvalidProblem: For systems on S^2, or a state of another system
        OutsideImage: If the scaled eigenvalues fall outside the image
    """
    if spec.on_s2:
        raise InvalidProblem(f"{spec.kind} has no action triangle")
    if state.system != spec.kind:
        raise InvalidProblem(f"State of {state.system} passed for {spec.kind}")
    etilde = state_etilde(state, etilde_mode)
    v0, v1 = state.scaled
    if spec.kind == "Ellipsoidal":
        return actions_ellipsoidal(spec.params, etilde, *separation_constants((v0, v1)))
    if spec.kind == "Prolate":
        return actions_prolate(spec.params[0], etilde, v0, v1)
    if spec.kind == "Oblate":
        return actions_oblate(spec.params[0], etilde, v0, v1)
    if spec.kind == "Lame":
        return actions_lame(spec.params, etilde, v0, v1)
    if spec.kind == "Spherical23":
        return actions_spherical(etilde, v1, v0)
    return actions_cylindrical(etilde, v0, v1)
