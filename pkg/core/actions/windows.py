"""Turning points and one-dimensional action integrals over clipped windows."""

from typing import Callable, Tuple

import numpy as np

from core.numerics import QuadratureSpec, integrate
from core.utils.exceptions import OutsideImage

WINDOW_TOL = 1e-12
DISCRIMINANT_TOL = 1e-10
ACTION_REL_TOL = 1e-11


def turning_points(a2: float, a1: float, a0: float) -> Tuple[float, float]:
    """
    Real roots r1 <= r2 of a2 z^2 + a1 z + a0 with a2 != 0.

    A discriminant that is negative only by rounding is treated as zero.

    Raises:
        OutsideImage: If the roots are genuinely complex
    """
    disc = a1 * a1 - 4.0 * a2 * a0
    scale = max(a1 * a1, abs(4.0 * a2 * a0), 1e-300)
    if disc < 0.0:
        if disc < -DISCRIMINANT_TOL * scale:
            raise OutsideImage(f"Turning points are complex (discriminant {disc:.3e})")
        disc = 0.0
    root = np.sqrt(disc)
    # avoid cancellation in the smaller root
    q = -0.5 * (a1 + np.copysign(root, a1)) if a1 != 0.0 else 0.5 * root
    if q == 0.0:
        return 0.0, 0.0
    r1, r2 = q / a2, a0 / q
    return (r1, r2) if r1 <= r2 else (r2, r1)


def window_action(p_squared: Callable[[np.ndarray], np.ndarray], lower: float, upper: float) -> float:
    """
    (2/pi) times the integral of sqrt(p^2) over [lower, upper].

    Both endpoints may be turning points or poles with square-root behaviour,
    so the sine substitution is always applied. Windows shorter than 1e-12
    give 0.

    Raises:
        OutsideImage: If p^2 is clearly negative inside the window
    """
    if upper - lower < WINDOW_TOL:
        return 0.0
    middle = float(p_squared(np.array([0.5 * (lower + upper)]))[0])
    if middle < 0.0:
        raise OutsideImage(f"p^2 = {middle:.3e} < 0 inside [{lower:.6g}, {upper:.6g}]")
    spec = QuadratureSpec(lower=lower, upper=upper, integrand_kind="sqrt-endpoint-both", rel_tol=ACTION_REL_TOL)
    value = integrate(spec, lambda s: np.sqrt(np.clip(p_squared(s), 0.0, None)))
    return 2.0 / np.pi * value
