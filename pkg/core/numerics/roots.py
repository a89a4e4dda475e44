"""Heine–Stieltjes root systems.

A polynomial solution S(z) = prod_k (z - z_k) of

    S'' + sum_j gamma_j / (z - e_j) S' + V(z) / prod_j (z - e_j) S = 0

has its zeros at an equilibrium of unit charges in the field of fixed charges
gamma_j / 2 placed at the poles e_j. For every occupancy vector (how many
zeros sit in each gap between consecutive poles) the equilibrium is unique,
so each occupancy is solved independently.
"""

from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.utils.exceptions import InvalidProblem, NonConvergence
from logger import Logger

MAX_RESTARTS = 50
MAX_NEWTON_STEPS = 200
RESIDUAL_TOL = 1e-12
STEP_FRACTION = 0.5


class RootSystemProblem(BaseModel):
    """Poles, exponents and per-gap root counts of an electrostatic root system."""

    model_config = ConfigDict(frozen=True)

    poles: Tuple[float, ...] = Field(..., description="Pole locations e_j, strictly increasing")
    exponents: Tuple[float, ...] = Field(..., description="Exponents gamma_j > 0, one per pole")
    occupancy: Tuple[int, ...] = Field(..., description="Number of roots in each gap (e_j, e_{j+1})")

    @model_validator(mode="after")
    def validate_shape(self):
        """Check lengths and signs; pole ordering is checked by the solver."""
        if len(self.exponents) != len(self.poles):
            raise ValueError("exponents must have one entry per pole")
        if len(self.occupancy) != len(self.poles) - 1:
            raise ValueError("occupancy must have one entry per gap between poles")
        if any(g <= 0 for g in self.exponents):
            raise ValueError("exponents must be positive")
        if any(n < 0 for n in self.occupancy):
            raise ValueError("occupancy entries must be nonnegative")
        return self

    @property
    def degree(self) -> int:
        return int(sum(self.occupancy))


def accessory_parameters(problem: RootSystemProblem, roots: np.ndarray) -> np.ndarray:
    """
    Residues q_j of the multiplicative term at each pole.

    Args:
        problem: The root system
        roots: Equilibrium roots z_k

    Returns:
        Array q with q_j = gamma_j * sum_k 1 / (z_k - e_j)
    """
    e = np.asarray(problem.poles, dtype=float)
    gamma = np.asarray(problem.exponents, dtype=float)
    z = np.asarray(roots, dtype=float)
    if z.size == 0:
        return np.zeros_like(e)
    return gamma * np.sum(1.0 / (z[:, None] - e[None, :]), axis=0)


def _chebyshev_seed(width: float, n: int, rng: np.random.Generator) -> np.ndarray:
    """Jittered Chebyshev offsets from the lower pole of a gap of the given width."""
    k = np.arange(n)
    nodes = 0.5 * width * (1.0 + np.cos(np.pi * (2 * k + 1) / (2 * n)))
    nodes = nodes + rng.uniform(-0.005, 0.005, size=n) * width
    margin = 1e-3 * width / (n + 1)
    return np.sort(np.clip(nodes, margin, width - margin))


class _Equilibrium:
    """
    Residual, Jacobian and energy of one root system in a fixed chamber.

    Every root is stored as its offset t_k from the lower pole of its gap, and
    all distances are formed from pole differences plus offsets. A root next to
    a pole therefore keeps its full relative precision however narrow the gap
    is, and however large the poles are.
    """

    def __init__(self, problem: RootSystemProblem):
        self.e = np.asarray(problem.poles, dtype=float)
        self.half_gamma = 0.5 * np.asarray(problem.exponents, dtype=float)
        self.labels = np.repeat(np.arange(len(problem.occupancy)), problem.occupancy)
        base = self.e[self.labels]
        self.width = np.diff(self.e)[self.labels]
        self.pole_offset = base[:, None] - self.e[None, :]
        self.pair_offset = base[:, None] - base[None, :]
        self.same_gap = np.flatnonzero(np.diff(self.labels) == 0)

    def positions(self, t: np.ndarray) -> np.ndarray:
        return self.e[self.labels] + t

    def pole_distances(self, t: np.ndarray) -> np.ndarray:
        """z_k - e_j; zero offsets are exact, so z_k - e_{own gap} == t_k."""
        return self.pole_offset + t[:, None]

    def pair_distances(self, t: np.ndarray) -> np.ndarray:
        diff = self.pair_offset + (t[:, None] - t[None, :])
        np.fill_diagonal(diff, np.inf)
        return diff

    def residual(self, t: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        pole_terms = self.half_gamma[None, :] / self.pole_distances(t)
        pair_terms = 1.0 / self.pair_distances(t)
        f = pole_terms.sum(axis=1) + pair_terms.sum(axis=1)
        scale = np.abs(pole_terms).sum(axis=1) + np.abs(pair_terms).sum(axis=1)
        return f, scale

    def jacobian(self, t: np.ndarray) -> np.ndarray:
        inv_sq = 1.0 / self.pair_distances(t) ** 2
        jac = inv_sq.copy()
        pole_sq = (self.half_gamma[None, :] / self.pole_distances(t) ** 2).sum(axis=1)
        np.fill_diagonal(jac, -pole_sq - inv_sq.sum(axis=1))
        return jac

    def energy(self, t: np.ndarray) -> float:
        pole = -np.sum(self.half_gamma[None, :] * np.log(np.abs(self.pole_distances(t))))
        iu = np.triu_indices(t.size, k=1)
        pair = -np.sum(np.log(np.abs(self.pair_distances(t))[iu]))
        return float(pole + pair)

    def clearance(self, t: np.ndarray) -> np.ndarray:
        """Distance of every root to its nearest pole or other root."""
        nearest_pole = np.min(np.abs(self.pole_distances(t)), axis=1)
        nearest_root = np.min(np.abs(self.pair_distances(t)), axis=1)
        return np.minimum(nearest_pole, nearest_root)

    def admissible(self, t: np.ndarray) -> bool:
        if np.any(t <= 0.0) or np.any(t >= self.width):
            return False
        return bool(np.all(t[self.same_gap + 1] > t[self.same_gap]))

    def accessory(self, t: np.ndarray) -> np.ndarray:
        return 2.0 * self.half_gamma * np.sum(1.0 / self.pole_distances(t), axis=0)


def _newton(system: _Equilibrium, t: np.ndarray) -> Tuple[np.ndarray, bool]:
    eps = np.finfo(float).eps
    energy = system.energy(t)
    for _ in range(MAX_NEWTON_STEPS):
        f, scale = system.residual(t)
        tol = np.maximum(RESIDUAL_TOL, 8.0 * eps * scale)
        if np.all(np.abs(f) <= tol):
            return t, True
        step = -np.linalg.solve(system.jacobian(t), f)
        # no root may travel more than a fraction of its clearance in one step
        reach = np.abs(step)
        limit = STEP_FRACTION * system.clearance(t)
        moving = reach > 0.0
        if np.any(moving):
            step = step * min(1.0, float(np.min(limit[moving] / reach[moving])))
        size = np.abs(step) / np.maximum(system.width, 1e-300)
        s = 1.0
        while s > 1e-12:
            trial = t + s * step
            if system.admissible(trial):
                trial_energy = system.energy(trial)
                # steps below rounding of the offsets are accepted even if the energy rises
                if trial_energy <= energy + 1e-13 * max(1.0, abs(energy)) or s * np.max(size) < 1e-10:
                    t, energy = trial, trial_energy
                    break
            s *= 0.5
        else:
            return t, False
    f, scale = system.residual(t)
    return t, bool(np.all(np.abs(f) <= np.maximum(RESIDUAL_TOL, 8.0 * eps * scale)))


def _solve(problem: RootSystemProblem, seed: int) -> Tuple[_Equilibrium, np.ndarray]:
    e = np.asarray(problem.poles, dtype=float)
    if np.any(np.diff(e) <= 0):
        raise InvalidProblem(f"Poles must be strictly increasing, got {problem.poles}")
    system = _Equilibrium(problem)
    if problem.degree == 0:
        return system, np.empty(0)

    widths = np.diff(e)
    rng = np.random.default_rng(seed)
    for attempt in range(MAX_RESTARTS):
        seeds = [_chebyshev_seed(widths[j], n, rng) for j, n in enumerate(problem.occupancy) if n > 0]
        t, converged = _newton(system, np.concatenate(seeds))
        if converged:
            if attempt:
                Logger.debug(f"Converged after {attempt} restarts", "[RootSystem]")
            return system, t
    raise NonConvergence(
        f"Root system did not converge after {MAX_RESTARTS} restarts",
        occupancy=tuple(problem.occupancy),
    )


def solve_root_system(problem: RootSystemProblem, seed: int = 42) -> np.ndarray:
    """
    Solve the electrostatic equilibrium for a given occupancy.

    Solves sum_j (gamma_j / 2) / (z_k - e_j) + sum_{l != k} 1 / (z_k - z_l) = 0
    for all k with damped Newton iterations seeded at jittered Chebyshev nodes.
    Roots are iterated as offsets from the lower pole of their gap, and each
    step is limited to half the distance of a root to its nearest pole or
    neighbour, so gaps much narrower than the pole values converge as well.

    Args:
        problem: Poles, exponents and occupancy
        seed: Seed for the jitter; the result is deterministic for a fixed seed

    Returns:
        Sorted array of the d = sum(occupancy) roots

    Raises:
        InvalidProblem: If the poles are not strictly increasing
        NonConvergence: If no restart reaches the residual tolerance
    """
    system, t = _solve(problem, seed)
    return np.sort(system.positions(t))


def solve_with_accessory(problem: RootSystemProblem, seed: int = 42) -> Tuple[np.ndarray, np.ndarray]:
    """
    Roots and accessory parameters of one equilibrium.

    The accessory parameters are formed from the offsets of the roots, not
    from the rounded roots, which matters once two poles nearly coalesce.

    Returns:
        Tuple (sorted roots, q) as from solve_root_system and accessory_parameters
    """
    system, t = _solve(problem, seed)
    if t.size == 0:
        return t, np.zeros(len(problem.poles))
    return np.sort(system.positions(t)), system.accessory(t)
