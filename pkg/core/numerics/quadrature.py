"""
Double exponential quadrature for integrands with square-root endpoint behaviour.

The action integrals have integrable singularities of the form (z - z0)^(±1/2)
at turning points and poles. Such endpoints are first removed by a change of
variable selected by the integrand kind, after which the smooth remainder is
integrated with the tanh-sinh rule. Levels halve the step size and reuse the
nodes of the previous level; the difference between successive levels is the
error estimate.
"""

from functools import lru_cache
from typing import Callable, Literal, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.utils.exceptions import NoConvergence
from logger import Logger

IntegrandKind = Literal["sqrt-endpoint-both", "sqrt-endpoint-left", "smooth"]
# g(distance to lo, distance to hi) in the integration variable
DistanceIntegrand = Callable[[np.ndarray, np.ndarray], np.ndarray]

T_MAX = 4.0
MIN_LEVEL = 3
MAX_LEVEL = 10
MAX_BISECTION_DEPTH = 6


class QuadratureSpec(BaseModel):
    """Interval, endpoint behaviour and tolerance of one integral."""

    model_config = ConfigDict(frozen=True)

    lower: float
    upper: float
    integrand_kind: IntegrandKind = Field("smooth", description="Endpoint behaviour of the integrand")
    rel_tol: float = Field(1e-10, gt=0.0, le=1e-3, description="Relative tolerance")

    @model_validator(mode="after")
    def validate_interval(self):
        if not self.lower < self.upper:
            raise ValueError(f"lower must be below upper, got [{self.lower}, {self.upper}]")
        return self


class TanhSinh:
    """
    Tanh-sinh rule on [-1, 1].

    Nodes are x = tanh(pi/2 sinh t) with weights pi/2 cosh t / cosh^2(pi/2 sinh t),
    sampled on t = j h for h = 2^-level. Distances of the nodes to the endpoints
    are kept separately so that no precision is lost next to them.
    """

    @staticmethod
    @lru_cache(maxsize=None)
    def nodes(level: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Nodes added at a given level.

        Args:
            level: Refinement level; level 0 holds every integer t

        Returns:
            Tuple (distance to -1, distance to +1, weight) for the new nodes only
        """
        h = 2.0**-level
        count = int(np.ceil(T_MAX / h))
        j = np.arange(-count, count + 1)
        if level > 0:
            j = j[j % 2 == 1]
        t = j * h
        u = 0.5 * np.pi * np.sinh(t)
        # 1 - tanh|u| = 2 / (1 + exp(2|u|)) keeps full relative precision
        complement = 2.0 / (1.0 + np.exp(2.0 * np.abs(u)))
        left = np.where(u < 0, complement, 2.0 - complement)
        right = np.where(u > 0, complement, 2.0 - complement)
        weight = 0.5 * np.pi * np.cosh(t) / np.cosh(u) ** 2
        return left, right, weight

    def integrate(
        self, g: DistanceIntegrand, lo: float, hi: float, rel_tol: float, margins: Tuple[float, float] = (0.0, 0.0)
    ) -> Tuple[float, float]:
        """
        Integrate over [lo, hi] with level doubling.

        g receives the distances of every node to the two ends of the full
        interval; `margins` are the distances of lo and hi to those ends when
        [lo, hi] is one piece of a bisection.

        Returns:
            Tuple (value, error estimate)
        """
        half = 0.5 * (hi - lo)
        total = 0.0
        previous = None
        for level in range(MAX_LEVEL + 1):
            left, right, weight = self.nodes(level)
            values = np.broadcast_to(
                np.asarray(g(margins[0] + half * left, margins[1] + half * right), dtype=float), weight.shape
            )
            if not np.all(np.isfinite(values)):
                raise NoConvergence(f"Integrand is not finite on [{lo}, {hi}] at level {level}")
            total += float(np.dot(values, weight))
            value = total * half * 2.0**-level
            if previous is not None and level >= MIN_LEVEL:
                error = abs(value - previous)
                if error <= rel_tol * abs(value) or error <= 1e-300:
                    return value, error
            previous = value
        return value, abs(value - previous)


_RULE = TanhSinh()


def _abscissa(a: float, b: float, to_a: np.ndarray, to_b: np.ndarray) -> np.ndarray:
    """Point at the given distances from a and b, built from the nearer end and kept inside (a, b)."""
    x = np.where(to_a <= to_b, a + to_a, b - to_b)
    return np.clip(x, np.nextafter(a, b), np.nextafter(b, a))


def _transformed(spec: QuadratureSpec, f: Callable[[np.ndarray], np.ndarray]) -> Tuple[DistanceIntegrand, float, float]:
    """
    Return (g, lo, hi) with the endpoint singularities of f removed.

    The Jacobian is taken from the rounded abscissa itself, so that g equals
    f(x) sqrt((x - a)(b - x)) (or f(x) sqrt(x - a)) at the point actually
    evaluated and stays bounded up to the endpoints.
    """
    a, b = spec.lower, spec.upper
    if spec.integrand_kind == "sqrt-endpoint-both":
        half = 0.5 * (b - a)

        def g(to_lo, to_hi):
            # a + half (1 + sin theta) with theta = -pi/2 + to_lo
            x = _abscissa(a, b, 2.0 * half * np.sin(0.5 * to_lo) ** 2, 2.0 * half * np.sin(0.5 * to_hi) ** 2)
            return f(x) * np.sqrt((x - a) * (b - x))

        return g, -0.5 * np.pi, 0.5 * np.pi
    if spec.integrand_kind == "sqrt-endpoint-left":
        width = b - a

        def g(to_lo, to_hi):
            u = np.where(to_lo <= to_hi, to_lo, 1.0 - to_hi)
            x = _abscissa(a, b, width * u * u, width * (1.0 - u * u))
            return f(x) * 2.0 * np.sqrt(width * (x - a))

        return g, 0.0, 1.0

    def g(to_lo, to_hi):
        return f(_abscissa(a, b, to_lo, to_hi))

    return g, a, b


def _bisect(g, lo: float, hi: float, rel_tol: float, depth: int, margins: Tuple[float, float]) -> float:
    value, error = _RULE.integrate(g, lo, hi, rel_tol, margins)
    if error <= rel_tol * max(abs(value), 1e-300):
        return value
    if depth >= MAX_BISECTION_DEPTH:
        raise NoConvergence(f"Quadrature stalled on [{lo}, {hi}] with error estimate {error:.3e}")
    mid = 0.5 * (lo + hi)
    width = 0.5 * (hi - lo)
    return _bisect(g, lo, mid, rel_tol, depth + 1, (margins[0], margins[1] + width)) + _bisect(
        g, mid, hi, rel_tol, depth + 1, (margins[0] + width, margins[1])
    )


def integrate(spec: QuadratureSpec, f: Callable[[np.ndarray], np.ndarray]) -> float:
    """
    Integrate a vectorised function over the interval of a QuadratureSpec.

    Args:
        spec: Interval, integrand kind and relative tolerance
        f: Function accepting and returning numpy arrays; finite on the open interval

    Returns:
        The integral to the requested relative tolerance

    Raises:
        NoConvergence: If refinement and bisection both stall, or f is not finite inside the interval
    """
    g, lo, hi = _transformed(spec, f)
    value, error = _RULE.integrate(g, lo, hi, spec.rel_tol)
    if error <= spec.rel_tol * abs(value) or (value == 0.0 and error == 0.0):
        return value
    Logger.debug(
        f"tanh-sinh estimate {error:.2e} above tolerance on [{spec.lower}, {spec.upper}], bisecting",
        "[Quadrature]",
    )
    return _bisect(g, lo, hi, spec.rel_tol, 1, (0.0, 0.0))
