"""
Separable coordinates on S^3 and S^2.

Every system expresses the squares x_i^2 as products of linear factors in the
separated coordinates s_j. The inverse transform recovers the s_j that are
roots of a confocal quadric sum_i w_i / (s - p_i) by taking the eigenvalues of
the companion matrix of its cleared numerator; the remaining coordinates are
ratios of squares.
"""

from typing import List, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import BaseModel, ConfigDict, field_validator

from core.models.SystemSpec import SystemKind, SystemSpec
from core.utils.exceptions import OutOfBox, SingularStratum, UnreachableTarget
from logger import Logger

BOX_TOL = 1e-12
SINGULAR_TOL = 1e-14
NORM_TOL = 1e-12


class SpherePoint(BaseModel):
    """A point on the unit sphere in R^4 (or R^3)."""

    model_config = ConfigDict(frozen=True)

    x: Tuple[float, ...]

    @field_validator("x")
    @classmethod
    def validate_on_sphere(cls, x):
        if len(x) not in (3, 4):
            raise ValueError(f"points live in R^3 or R^4, got dimension {len(x)}")
        norm = float(np.sum(np.square(x)))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"point is not on the unit sphere (|x|^2 = {norm!r})")
        return tuple(float(v) for v in x)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.x, dtype=float)


class SeparableCoords(BaseModel):
    """Separated coordinates s_j of one point."""

    model_config = ConfigDict(frozen=True)

    s: Tuple[float, ...]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.s, dtype=float)


def normalized_axes(spec: SystemSpec) -> Tuple[Tuple[float, ...], float, float]:
    """
    Normalised axes of a system and the affine map back to the user's axes.

    Args:
        spec: The coordinate system

    Returns:
        Tuple (axes, offset, scale) with user axis = offset + scale * normalised axis.
        Prolate and Oblate return (0, 1, a); Lame and S2Ellipsoidal (0, 1, a);
        Ellipsoidal (0, 1, e3', e4'); parameter-free systems an empty tuple.
    """
    params = np.asarray(spec.params, dtype=float)
    if spec.kind in ("Prolate", "Oblate"):
        return (0.0, 1.0, float(params[0])), 0.0, 1.0
    if spec.kind in ("Ellipsoidal", "Lame", "S2Ellipsoidal"):
        offset, scale = float(params[0]), float(params[1] - params[0])
        return tuple(float(v) for v in (params - offset) / scale), offset, scale
    return (), 0.0, 1.0


def coordinate_box(spec: SystemSpec) -> List[Tuple[float, float]]:
    """Admissible interval of every separated coordinate."""
    p = spec.params
    if spec.kind == "Ellipsoidal":
        return [(p[j], p[j + 1]) for j in range(3)]
    if spec.kind == "S2Ellipsoidal":
        return [(p[j], p[j + 1]) for j in range(2)]
    if spec.kind == "Prolate":
        return [(0.0, 1.0), (0.0, 1.0), (1.0, p[0])]
    if spec.kind == "Oblate":
        return [(0.0, 1.0), (1.0, p[0]), (0.0, 1.0)]
    if spec.kind == "Lame":
        return [(0.0, 1.0), (p[0], p[1]), (p[1], p[2])]
    if spec.kind == "S2Spherical":
        return [(0.0, 1.0), (0.0, 1.0)]
    return [(0.0, 1.0)] * 3


def _confocal_squares(poles: Sequence[float], s: Sequence[float]) -> np.ndarray:
    """x_i^2 = prod_j (s_j - p_i) / prod_{k != i} (p_k - p_i)."""
    poles = np.asarray(poles, dtype=float)
    s = np.asarray(s, dtype=float)
    out = np.empty(poles.size)
    for i, pole in enumerate(poles):
        others = np.delete(poles, i)
        out[i] = np.prod(s - pole) / np.prod(others - pole)
    return out


def _squares(spec: SystemSpec, s: np.ndarray) -> np.ndarray:
    kind = spec.kind
    if kind in ("Ellipsoidal", "S2Ellipsoidal"):
        return _confocal_squares(spec.params, s)
    if kind == "Prolate":
        a = spec.params[0]
        s1, s2, s3 = s
        return np.array([
            s1 * s3 / a,
            -(s1 - 1.0) * s2 * (s3 - 1.0) / (a - 1.0),
            (s1 - 1.0) * (s2 - 1.0) * (s3 - 1.0) / (a - 1.0),
            (a - s1) * (a - s3) / ((a - 1.0) * a),
        ])
    if kind == "Oblate":
        a = spec.params[0]
        s1, s2, s3 = s
        ring = (s1 - a) * (s2 - a) / (a * (a - 1.0))
        return np.array([
            s1 * s2 / a,
            -(s1 - 1.0) * (s2 - 1.0) / (a - 1.0),
            ring * s3,
            ring * (1.0 - s3),
        ])
    if kind == "Lame":
        s1 = s[0]
        return np.concatenate([[s1], (1.0 - s1) * _confocal_squares(spec.params, s[1:])])
    if kind == "Spherical23":
        s1, s2, s3 = s
        return np.array([s1, (1 - s1) * s2, (1 - s1) * (1 - s2) * s3, (1 - s1) * (1 - s2) * (1 - s3)])
    if kind == "Cylindrical":
        s1, s2, s3 = s
        return np.array([s1 * s2, s2 * (1 - s1), s3 * (1 - s2), (1 - s2) * (1 - s3)])
    s1, s2 = s
    return np.array([s1, (1 - s1) * s2, (1 - s1) * (1 - s2)])


def to_cartesian(spec: SystemSpec, s: SeparableCoords, signs: Optional[Sequence[int]] = None) -> SpherePoint:
    """
    Map separated coordinates to a point on the sphere.

    Args:
        spec: The coordinate system
        s: Coordinates inside the admissible box of the system
        signs: Sign of each Cartesian coordinate (defaults to all +1)

    Returns:
        The point with x_i = sign_i * sqrt(x_i^2)

    Raises:
        OutOfBox: If a coordinate leaves its interval or the signs are malformed
    """
    values = s.as_array()
    box = coordinate_box(spec)
    if values.size != len(box):
        raise OutOfBox(f"{spec.kind} takes {len(box)} coordinates, got {values.size}")
    for j, (lo, hi) in enumerate(box):
        tol = BOX_TOL * max(1.0, abs(lo), abs(hi))
        if not (lo - tol <= values[j] <= hi + tol):
            raise OutOfBox(f"s{j + 1}={values[j]!r} outside [{lo}, {hi}] for {spec.kind}")
    values = np.clip(values, [b[0] for b in box], [b[1] for b in box])

    squares = np.clip(_squares(spec, values), 0.0, None)
    if signs is None:
        signs = np.ones(spec.nvars)
    signs = np.asarray(signs, dtype=float)
    if signs.shape != (spec.nvars,) or not np.all(np.abs(signs) == 1.0):
        raise OutOfBox(f"signs must be a vector of +-1 of length {spec.nvars}")
    x = signs * np.sqrt(squares)
    # rounding in the products may leave |x|^2 a few ulps away from one
    x = x / np.linalg.norm(x)
    return SpherePoint(x=tuple(x))


def _confocal_roots(weights: Sequence[float], poles: Sequence[float]) -> np.ndarray:
    """Real roots of sum_i w_i / (s - p_i) from the companion matrix of its numerator."""
    numerator = np.zeros(len(poles))
    for i, w in enumerate(weights):
        numerator = numerator + w * P.polyfromroots(np.delete(np.asarray(poles, dtype=float), i))
    return np.sort(P.polyroots(numerator).real)


def from_cartesian(spec: SystemSpec, p: SpherePoint) -> SeparableCoords:
    """
    Recover separated coordinates of a point off the coordinate hyperplanes.

    Raises:
        SingularStratum: If some Cartesian coordinate vanishes
    """
    x = p.as_array()
    if x.size != spec.nvars:
        raise SingularStratum(f"{spec.kind} expects a point in R^{spec.nvars}")
    if np.any(np.abs(x) <= SINGULAR_TOL):
        raise SingularStratum(f"point {p.x} lies on a coordinate hyperplane")
    sq = x * x
    kind = spec.kind

    if kind in ("Ellipsoidal", "S2Ellipsoidal"):
        s = _confocal_roots(sq, spec.params)
    elif kind == "Prolate":
        a = spec.params[0]
        s1, s3 = _confocal_roots([sq[0], sq[1] + sq[2], sq[3]], [0.0, 1.0, a])
        s = np.array([s1, sq[1] / (sq[1] + sq[2]), s3])
    elif kind == "Oblate":
        a = spec.params[0]
        s1, s2 = _confocal_roots([sq[0], sq[1], sq[2] + sq[3]], [0.0, 1.0, a])
        s = np.array([s1, s2, sq[2] / (sq[2] + sq[3])])
    elif kind == "Lame":
        s = np.concatenate([[sq[0]], _confocal_roots(sq[1:], spec.params)])
    elif kind == "Spherical23":
        s1 = sq[0]
        s2 = sq[1] / (1.0 - s1)
        s = np.array([s1, s2, sq[2] / ((1.0 - s1) * (1.0 - s2))])
    elif kind == "Cylindrical":
        s2 = sq[0] + sq[1]
        s = np.array([sq[0] / s2, s2, sq[2] / (1.0 - s2)])
    else:
        s1 = sq[0]
        s = np.array([s1, sq[1] / (1.0 - s1)])

    box = coordinate_box(spec)
    s = np.clip(s, [b[0] for b in box], [b[1] for b in box])
    return SeparableCoords(s=tuple(float(v) for v in s))


def degenerate(spec: SystemSpec, target: SystemKind, eps: float) -> SystemSpec:
    """
    Ellipsoidal system that approaches a degenerate target as eps -> 0.

    Prolate collapses e3 onto e2, Oblate collapses e4 onto e3 and Lame sends
    e1 to -1/eps. The base may be an Ellipsoidal spec, or the target kind
    itself, whose normalised axes are then used.

    Args:
        spec: Base system
        target: "Prolate", "Oblate" or "Lame"
        eps: Positive collapse parameter

    Returns:
        An Ellipsoidal SystemSpec

    Raises:
        UnreachableTarget: If the target cannot be reached from the base
    """
    if not eps > 0:
        raise UnreachableTarget(f"eps must be positive, got {eps}")
    if spec.kind == "Ellipsoidal":
        e = list(spec.params)
    elif spec.kind == target and target in ("Prolate", "Oblate"):
        a = spec.params[0]
        e = [0.0, 1.0, 1.0, a] if target == "Prolate" else [0.0, 1.0, a, a]
    elif spec.kind == "Lame" and target == "Lame":
        e = [0.0, *spec.params]
    else:
        raise UnreachableTarget(f"{target} is not reachable from {spec.kind}")

    if target == "Prolate":
        e[2] = e[1] + eps
    elif target == "Oblate":
        e[3] = e[2] + eps
    elif target == "Lame":
        e[0] = -1.0 / eps
    else:
        raise UnreachableTarget(f"{target} is not a degeneration of the ellipsoidal system")

    if np.any(np.diff(e) <= 0):
        raise UnreachableTarget(f"degenerate axes {tuple(e)} are not strictly increasing")
    Logger.debug(f"{spec.label()} -> {target} at eps={eps:g}: e={tuple(e)}", "[Geometry]")
    return SystemSpec(kind="Ellipsoidal", params=tuple(float(v) for v in e))
