"""
Boundary of the classical momentum map image at E~ = 1.

The image is where every separated window is nonempty. Each boundary piece is
a collapsed window: a turning point reaching a pole, or the two turning points
meeting. The curves are given in the hbar-scaled eigenvalue coordinates of the
spectrum solvers, so they can be drawn over the scaled joint spectrum.
"""

from typing import List

import numpy as np

from core.geometry import normalized_axes
from core.models import SystemSpec
from core.spectra.ellipsoidal import LEMMA_SCALE
from core.utils.exceptions import InvalidProblem

DEFAULT_SAMPLES = 201


def _segment(start, end, samples: int) -> np.ndarray:
    t = np.linspace(0.0, 1.0, samples, endpoint=False)[:, None]
    return (1.0 - t) * np.asarray(start, dtype=float) + t * np.asarray(end, dtype=float)


def _closed(pieces: List[np.ndarray]) -> np.ndarray:
    path = np.vstack(pieces)
    return np.vstack([path, path[:1]])


def _ellipsoidal(e, samples: int) -> np.ndarray:
    # turning points r1 <= r2 with e1 <= r1 <= e3 and e2 <= r2 <= e4
    e1, e2, e3, e4 = e
    corners = [(e1, e2), (e1, e4), (e3, e4), (e3, e3), (e2, e2)]
    roots = _closed([_segment(a, b, samples) for a, b in zip(corners, corners[1:] + corners[:1])])
    total, product = roots.sum(axis=1), roots.prod(axis=1)
    return np.column_stack([LEMMA_SCALE[0] * total, LEMMA_SCALE[1] * product])


def _over_m(lower, upper, samples: int, m_max: float = 1.0) -> np.ndarray:
    m = np.linspace(-m_max, m_max, samples)
    bottom = np.column_stack([m, lower(m)])
    top = np.column_stack([m[::-1], upper(m[::-1])])
    return _closed([bottom, top])


def _oblate_top(a: float, m: np.ndarray) -> np.ndarray:
    # double turning point inside [1, a], then the turning point stuck at 1
    k = np.abs(m)
    double = (np.sqrt(a) - np.sqrt(a - 1.0) * k) ** 2
    return np.where(k * k <= (a - 1.0) / a, double, 1.0 - k * k)


def image_boundary(spec: SystemSpec, samples: int = DEFAULT_SAMPLES) -> np.ndarray:
    """
    Closed polyline around the image of the momentum map.

    Args:
        spec: A system on S^3
        samples: Points per boundary piece

    Returns:
        (N, 2) array whose first and last rows coincide

    Raises:
        InvalidProblem: For systems on S^2
    """
    if spec.on_s2:
        raise InvalidProblem(f"{spec.kind} lives on S^2 and has no action map image")
    if spec.kind == "Ellipsoidal":
        return _ellipsoidal(spec.params, samples)
    if spec.kind == "Prolate":
        a = spec.params[0]
        return _over_m(np.zeros_like, lambda m: a * (1.0 - m * m), samples)
    if spec.kind == "Oblate":
        a = spec.params[0]
        return _over_m(np.zeros_like, lambda m: _oblate_top(a, m), samples)
    if spec.kind == "Spherical23":
        return _over_m(np.zeros_like, lambda m: 1.0 - m * m, samples)
    if spec.kind == "Cylindrical":
        corners = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)]
        return _closed([_segment(p, q, samples) for p, q in zip(corners, corners[1:] + corners[:1])])
    if spec.kind == "Lame":
        (_, _, a), offset, scale = normalized_axes(spec)
        corners = [(0.0, offset), (1.0, 0.0), (0.0, a * scale + offset)]
        return _closed([_segment(p, q, samples) for p, q in zip(corners, corners[1:] + corners[:1])])
    raise InvalidProblem(f"No image boundary for {spec.kind}")


def inside_image(boundary: np.ndarray, points: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """
    Which points lie inside the closed polyline or within tol of it.

    Even-odd crossing count, plus a distance test so that points on the
    boundary itself count as inside.
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    start, end = boundary[:-1], boundary[1:]
    x, y = points[:, 0:1], points[:, 1:2]
    x0, y0, x1, y1 = start[:, 0], start[:, 1], end[:, 0], end[:, 1]

    straddles = (y0 > y) != (y1 > y)
    with np.errstate(divide="ignore", invalid="ignore"):
        cross_x = x0 + (y - y0) * (x1 - x0) / (y1 - y0)
    crossings = np.sum(straddles & (x < cross_x), axis=1)

    edge = end - start
    length2 = np.maximum((edge**2).sum(axis=1), 1e-300)
    t = np.clip(((x - x0) * edge[:, 0] + (y - y0) * edge[:, 1]) / length2, 0.0, 1.0)
    distance = np.hypot(x0 + t * edge[:, 0] - x, y0 + t * edge[:, 1] - y).min(axis=1)
    return (crossings % 2 == 1) | (distance <= tol)
