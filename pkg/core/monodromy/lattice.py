"""
Parallel transport of a lattice unit cell through a joint spectrum.

A cell is three spectrum points: a base and the tips of v1 and v2. It walks
one lattice step at a time towards each waypoint of a closed polyline; every
step moves the base onto a tip (or its mirror) and completes the new cell by
the parallelogram rule, snapping each predicted corner to the spectrum point
at that place. Once the loop closes, the cell walks back onto its starting
base and the tips of the final v1, v2 are located in lattice steps of the
initial cell, giving an integer matrix.
"""

from itertools import product
from typing import List, Sequence, Tuple, Union

import numpy as np
from scipy.spatial import cKDTree

from core.models import JointSpectrum, LatticeCell, TransportResult
from core.utils.exceptions import AmbiguousMatch, InvalidProblem, LeftLattice
from logger import Logger

DEFAULT_RADIUS = 0.35
DEFAULT_WAYPOINTS = 64
MAX_REFINEMENTS = 3
NEIGHBOURS = 16
AMBIGUITY_RATIO = 1.1
# a predicted corner must land within this fraction of the shortest cell edge
SNAP_TOL = 0.35
MAX_STEPS = 1000
SEARCH_RADIUS = 2

Points = Union[JointSpectrum, np.ndarray]
Corners = Tuple[int, int, int]


def _as_points(points: Points) -> np.ndarray:
    if isinstance(points, JointSpectrum):
        return points.points(scaled=True)
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise InvalidProblem(f"Expected an (N, 2) point set, got shape {pts.shape}")
    return pts


def _displacements(tree: cKDTree, pts: np.ndarray, index: int) -> np.ndarray:
    k = min(NEIGHBOURS + 1, len(pts))
    _, idx = tree.query(pts[index], k=k)
    idx = np.atleast_1d(idx)
    return pts[idx[idx != index]] - pts[index]


def circle_loop(
    center: Sequence[float], radius: float = DEFAULT_RADIUS, n: int = DEFAULT_WAYPOINTS, clockwise: bool = False
) -> np.ndarray:
    """
    Closed circular loop of n waypoints; the first waypoint is repeated at the end.

    Returns:
        Array of shape (n + 1, 2)
    """
    if radius <= 0.0 or n < 3:
        raise InvalidProblem(f"Loop needs radius > 0 and at least 3 waypoints, got r={radius}, n={n}")
    theta = 2.0 * np.pi * np.arange(n + 1) / n
    if clockwise:
        theta = -theta
    c = np.asarray(center, dtype=float)
    return np.column_stack([c[0] + radius * np.cos(theta), c[1] + radius * np.sin(theta)])


def refine_loop(loop: np.ndarray) -> np.ndarray:
    """Insert the midpoint of every segment."""
    loop = np.asarray(loop, dtype=float)
    mids = 0.5 * (loop[:-1] + loop[1:])
    out = np.empty((2 * len(loop) - 1, 2))
    out[0::2] = loop
    out[1::2] = mids
    return out


def initial_cell(points: Points, near: Sequence[float], direction_hint: Sequence[float] = (0.0, 1.0)) -> LatticeCell:
    """
    Unit cell at the spectrum point nearest to `near`.

    v1 is the shortest neighbour displacement roughly along the hint, v2 the
    shortest one clearly transverse to v1 on the clockwise side of the hint.

    Raises:
        LeftLattice: If no transverse neighbour exists
    """
    pts = _as_points(points)
    tree = cKDTree(pts)
    _, base = tree.query(np.asarray(near, dtype=float))
    disp = _displacements(tree, pts, int(base))
    lengths = np.linalg.norm(disp, axis=1)

    hint = np.asarray(direction_hint, dtype=float)
    hint = hint / np.linalg.norm(hint)
    along = disp @ hint / lengths
    candidates = np.flatnonzero(along > 0.8)
    if len(candidates) == 0:
        raise LeftLattice(f"No neighbour of {pts[base]} along {tuple(hint)}")
    v1 = disp[candidates[np.argmin(lengths[candidates])]]

    side = np.array([hint[1], -hint[0]])
    sine = np.abs(disp[:, 0] * v1[1] - disp[:, 1] * v1[0]) / (lengths * np.linalg.norm(v1))
    candidates = np.flatnonzero((sine > 0.5) & (disp @ side > 0.0))
    if len(candidates) == 0:
        raise LeftLattice(f"No transverse neighbour of {pts[base]}")
    v2 = disp[candidates[np.argmin(lengths[candidates])]]
    return LatticeCell(base=tuple(pts[base]), v1=tuple(v1), v2=tuple(v2))


class _LatticeWalk:
    """Cells as point indices, moved by whole lattice steps."""

    def __init__(self, pts: np.ndarray, tree: cKDTree):
        self.pts = pts
        self.tree = tree

    def snap(self, target: np.ndarray, scale: float) -> int:
        """Index of the spectrum point at a predicted corner."""
        dist, idx = self.tree.query(target, k=min(2, len(self.pts)))
        dist, idx = np.atleast_1d(dist), np.atleast_1d(idx)
        if dist[0] > SNAP_TOL * scale:
            raise LeftLattice(
                f"No spectrum point at predicted corner {tuple(target)} (nearest {dist[0]:.3e}, edge {scale:.3e})"
            )
        if len(dist) > 1 and dist[1] <= AMBIGUITY_RATIO * dist[0]:
            raise AmbiguousMatch(
                f"Two spectrum points fit corner {tuple(target)} ({dist[0]:.3e} vs {dist[1]:.3e})"
            )
        return int(idx[0])

    def anchor(self, cell: LatticeCell) -> Corners:
        base = np.array(cell.base)
        scale = min(np.linalg.norm(cell.v1), np.linalg.norm(cell.v2))
        return (
            self.snap(base, scale),
            self.snap(base + np.array(cell.v1), scale),
            self.snap(base + np.array(cell.v2), scale),
        )

    def vectors(self, corners: Corners) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        p0, p1, p2 = (self.pts[i] for i in corners)
        return p0, p1 - p0, p2 - p0

    def edge(self, corners: Corners) -> float:
        _, v1, v2 = self.vectors(corners)
        return float(min(np.linalg.norm(v) for v in (v1, v2, v1 + v2, v1 - v2)))

    def step(self, corners: Corners, axis: int, sign: int) -> Corners:
        """Move the base by +-v1 (axis 0) or +-v2 (axis 1)."""
        i0 = corners[0]
        tip, other = (corners[1], corners[2]) if axis == 0 else (corners[2], corners[1])
        p0, pt, po = self.pts[i0], self.pts[tip], self.pts[other]
        scale = self.edge(corners)
        if sign > 0:
            new0, new_tip = tip, self.snap(2.0 * pt - p0, scale)
        else:
            new0 = self.snap(2.0 * p0 - pt, scale)
            new_tip = i0
        new_other = self.snap(self.pts[new0] + (po - p0), scale)
        if len({new0, new_tip, new_other}) < 3:
            raise LeftLattice(f"Cell collapsed while stepping from {tuple(p0)}")
        return (new0, new_tip, new_other) if axis == 0 else (new0, new_other, new_tip)

    def coordinates(self, corners: Corners, target: np.ndarray) -> np.ndarray:
        p0, v1, v2 = self.vectors(corners)
        return np.linalg.solve(np.column_stack([v1, v2]), target - p0)

    def walk_to(self, corners: Corners, target: np.ndarray) -> Corners:
        """Step until the base is the lattice point nearest the target."""
        for _ in range(MAX_STEPS):
            c = self.coordinates(corners, target)
            axis = int(np.argmax(np.abs(c)))
            if abs(c[axis]) <= 0.5:
                return corners
            corners = self.step(corners, axis, 1 if c[axis] > 0 else -1)
        raise LeftLattice(f"Cell did not reach {tuple(target)} within {MAX_STEPS} steps")

    def walk_steps(self, corners: Corners, i: int, j: int) -> int:
        for _ in range(abs(i)):
            corners = self.step(corners, 0, 1 if i > 0 else -1)
        for _ in range(abs(j)):
            corners = self.step(corners, 1, 1 if j > 0 else -1)
        return corners[0]

    def lattice_steps(self, start: Corners, index: int) -> Tuple[int, int]:
        """Integer steps (i, j) with base + i v1 + j v2 landing on spectrum point `index`."""
        guess = self.coordinates(start, self.pts[index])
        centre = np.rint(guess).astype(int)
        offsets = range(-SEARCH_RADIUS, SEARCH_RADIUS + 1)
        candidates = sorted(
            ((int(centre[0] + di), int(centre[1] + dj)) for di, dj in product(offsets, offsets)),
            key=lambda ij: float(np.hypot(ij[0] - guess[0], ij[1] - guess[1])),
        )
        for i, j in candidates:
            try:
                if self.walk_steps(start, i, j) == index:
                    return i, j
            except (LeftLattice, AmbiguousMatch):
                continue
        raise LeftLattice(f"Point {tuple(self.pts[index])} is not a lattice step combination near {tuple(guess)}")

    def cell(self, corners: Corners) -> LatticeCell:
        p0, v1, v2 = self.vectors(corners)
        try:
            return LatticeCell(base=tuple(p0), v1=tuple(v1), v2=tuple(v2))
        except ValueError as e:
            raise LeftLattice(f"Degenerate cell at {tuple(p0)}") from e


def _transport_once(walk: _LatticeWalk, loop: np.ndarray, start: Corners) -> Tuple[List[LatticeCell], Corners]:
    corners = start
    cells = []
    for waypoint in loop:
        corners = walk.walk_to(corners, waypoint)
        cells.append(walk.cell(corners))
    corners = walk.walk_to(corners, walk.pts[start[0]])
    if corners[0] != start[0]:
        raise LeftLattice(f"Loop closed at {tuple(walk.pts[corners[0]])}, not at the starting base")
    return cells, corners


def transport(
    points: Points, loop: np.ndarray, cell: LatticeCell, max_refinements: int = MAX_REFINEMENTS
) -> TransportResult:
    """
    Carry a unit cell around a closed loop.

    Args:
        points: Joint spectrum or (N, 2) array of scaled eigenvalue pairs
        loop: Waypoints of a closed polyline (first == last)
        cell: Starting cell; base, base + v1 and base + v2 must be spectrum points
        max_refinements: Times the waypoints may be doubled after an ambiguous match

    Returns:
        TransportResult whose rows give the transported v1, v2 in lattice steps of the initial cell

    Raises:
        AmbiguousMatch: If a predicted corner stays ambiguous after every refinement
        LeftLattice: If the walk meets a place without local lattice structure
    """
    pts = _as_points(points)
    loop = np.asarray(loop, dtype=float)
    if len(loop) < 4 or not np.allclose(loop[0], loop[-1]):
        raise InvalidProblem("Transport loop must be closed and have at least 3 segments")
    walk = _LatticeWalk(pts, cKDTree(pts))
    start = walk.anchor(cell)

    for refinement in range(max_refinements + 1):
        try:
            cells, final = _transport_once(walk, loop, start)
        except AmbiguousMatch as e:
            if refinement == max_refinements:
                raise
            Logger.debug(f"{e}; refining loop to {2 * (len(loop) - 1)} segments", "[Monodromy]")
            loop = refine_loop(loop)
            continue
        row1 = walk.lattice_steps(start, final[1])
        row2 = walk.lattice_steps(start, final[2])
        matrix = (row1, row2)
        Logger.debug(f"Transport matrix {matrix} after {refinement} refinements", "[Monodromy]")
        try:
            return TransportResult(matrix=matrix, cells=cells, refinements=refinement)
        except ValueError as e:
            raise LeftLattice(f"Transport ended in a non-unimodular basis change {matrix}") from e
