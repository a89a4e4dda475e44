"""Quantum monodromy by lattice transport, and polygon projections."""

from .lattice import (
    DEFAULT_RADIUS,
    DEFAULT_WAYPOINTS,
    circle_loop,
    refine_loop,
    initial_cell,
    transport,
)
from .polygon import combined_classes, sublattice, polygon_projection

__all__ = [
    "DEFAULT_RADIUS",
    "DEFAULT_WAYPOINTS",
    "circle_loop",
    "refine_loop",
    "initial_cell",
    "transport",
    "combined_classes",
    "sublattice",
    "polygon_projection",
]
