"""Coordinate systems on S^3 and S^2, transforms and degenerations."""

from .coordinates import (
    SpherePoint,
    SeparableCoords,
    coordinate_box,
    normalized_axes,
    to_cartesian,
    from_cartesian,
    degenerate,
)

__all__ = [
    "SpherePoint",
    "SeparableCoords",
    "coordinate_box",
    "normalized_axes",
    "to_cartesian",
    "from_cartesian",
    "degenerate",
]
