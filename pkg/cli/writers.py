"""
Text renderers for CSV, JSON and SVG outputs.

Every writer returns a string; identical inputs give byte-identical text.
"""

import json
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

SVG_SIZE = 640
SVG_MARGIN = 48
POINT_RADIUS = 2.5
TRIANGLE_HEIGHT = np.sqrt(3.0) / 2.0


def to_csv_text(rows: List[Dict[str, Any]], columns: Optional[Sequence[str]] = None) -> str:
    """UTF-8 CSV with a header row; floats in shortest round-trip form."""
    frame = pd.DataFrame(rows, columns=list(columns) if columns is not None else None)
    return frame.to_csv(index=False, lineterminator="\n", float_format=None)


def to_json_text(payload: Any) -> str:
    return json.dumps(payload, indent=2, allow_nan=True) + "\n"


def _fmt(v: float) -> str:
    return f"{v:.3f}".rstrip("0").rstrip(".")


class SvgCanvas:
    """Minimal SVG builder mapping data coordinates to a square canvas."""

    def __init__(self, xlim: Tuple[float, float], ylim: Tuple[float, float], title: str = ""):
        span_x = xlim[1] - xlim[0] or 1.0
        span_y = ylim[1] - ylim[0] or 1.0
        self.xlim = (xlim[0] - 0.05 * span_x, xlim[1] + 0.05 * span_x)
        self.ylim = (ylim[0] - 0.05 * span_y, ylim[1] + 0.05 * span_y)
        self.title = title
        self.items: List[str] = []

    def _map(self, x: float, y: float) -> Tuple[float, float]:
        inner = SVG_SIZE - 2 * SVG_MARGIN
        px = SVG_MARGIN + (x - self.xlim[0]) / (self.xlim[1] - self.xlim[0]) * inner
        py = SVG_SIZE - SVG_MARGIN - (y - self.ylim[0]) / (self.ylim[1] - self.ylim[0]) * inner
        return px, py

    def circle(self, x: float, y: float, colour: str, r: float = POINT_RADIUS):
        px, py = self._map(x, y)
        self.items.append(f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="{_fmt(r)}" fill="{colour}"/>')

    def line(self, x0: float, y0: float, x1: float, y1: float, colour: str = "black", width: float = 1.0):
        p0, p1 = self._map(x0, y0), self._map(x1, y1)
        self.items.append(
            f'<line x1="{_fmt(p0[0])}" y1="{_fmt(p0[1])}" x2="{_fmt(p1[0])}" y2="{_fmt(p1[1])}" '
            f'stroke="{colour}" stroke-width="{_fmt(width)}"/>'
        )

    def polyline(self, path: np.ndarray, colour: str = "black", width: float = 1.0):
        mapped = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in (self._map(x, y) for x, y in path))
        self.items.append(f'<polyline points="{mapped}" fill="none" stroke="{colour}" stroke-width="{_fmt(width)}"/>')

    def text(self, x: float, y: float, label: str, size: int = 12):
        px, py = self._map(x, y)
        self.items.append(f'<text x="{_fmt(px)}" y="{_fmt(py)}" font-size="{size}">{label}</text>')

    def axes(self, xlabel: str, ylabel: str):
        x0, x1 = self.xlim
        y0, y1 = self.ylim
        self.line(x0, y0, x1, y0)
        self.line(x0, y0, x0, y1)
        self.text(x1, y0, xlabel)
        self.text(x0, y1, ylabel)

    def render(self) -> str:
        head = (
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
            f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">'
        )
        title = f"<title>{self.title}</title>" if self.title else ""
        return "\n".join([head, title, *self.items, "</svg>"]) + "\n"


def _limits(points: np.ndarray) -> Tuple[Tuple[float, float], Tuple[float, float]]:
    if len(points) == 0:
        return (0.0, 1.0), (0.0, 1.0)
    return (float(points[:, 0].min()), float(points[:, 0].max())), (
        float(points[:, 1].min()),
        float(points[:, 1].max()),
    )


def scatter_svg(
    points: np.ndarray,
    colours: Sequence[str],
    xlabel: str,
    ylabel: str,
    title: str = "",
    boundary: Optional[np.ndarray] = None,
) -> str:
    """Scatter plot of (N, 2) points with one colour per point, over an optional closed boundary."""
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    extent = points if boundary is None else np.vstack([points, boundary])
    canvas = SvgCanvas(*_limits(extent), title=title)
    canvas.axes(xlabel, ylabel)
    if boundary is not None:
        canvas.polyline(boundary, colour="grey")
    for (x, y), colour in zip(points, colours):
        canvas.circle(x, y, colour)
    return canvas.render()


def barycentric(actions: np.ndarray) -> np.ndarray:
    """Embed (J1, J2, J3) in the triangle with vertices (0, 0), (1, 0), (1/2, sqrt(3)/2)."""
    actions = np.asarray(actions, dtype=float).reshape(-1, 3)
    total = actions.sum(axis=1, keepdims=True)
    weights = actions / np.where(total == 0.0, 1.0, total)
    vertices = np.array([[0.0, 0.0], [1.0, 0.0], [0.5, TRIANGLE_HEIGHT]])
    return weights @ vertices


def ternary_svg(actions: np.ndarray, colours: Sequence[str], title: str = "") -> str:
    """Action triples drawn in the action triangle."""
    canvas = SvgCanvas((0.0, 1.0), (0.0, TRIANGLE_HEIGHT), title=title)
    corners = [(0.0, 0.0), (1.0, 0.0), (0.5, TRIANGLE_HEIGHT)]
    for (x0, y0), (x1, y1) in zip(corners, corners[1:] + corners[:1]):
        canvas.line(x0, y0, x1, y1, colour="grey")
    for label, (x, y) in zip(("J1", "J2", "J3"), corners):
        canvas.text(x, y, label)
    for (x, y), colour in zip(barycentric(actions), colours):
        canvas.circle(x, y, colour)
    return canvas.render()


def cells_svg(points: np.ndarray, cells: Sequence[Tuple[Tuple[float, float], ...]], title: str = "") -> str:
    """Lattice points with the transported cell (base, v1, v2) drawn at every waypoint."""
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    canvas = SvgCanvas(*_limits(points), title=title)
    canvas.axes("m", "lambda")
    for x, y in points:
        canvas.circle(x, y, "grey", r=1.5)
    for base, v1, v2 in cells:
        canvas.line(base[0], base[1], base[0] + v1[0], base[1] + v1[1], colour="red", width=1.5)
        canvas.line(base[0], base[1], base[0] + v2[0], base[1] + v2[1], colour="blue", width=1.5)
    return canvas.render()
