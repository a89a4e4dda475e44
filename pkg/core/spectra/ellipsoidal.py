"""
Ellipsoidal joint spectrum on S^3 by Heine–Stieltjes root systems.

For a symmetry class mu the eigenfunction is x^mu times a product over the
roots z_k of quadratic forms; the roots solve an electrostatic equilibrium
with exponents 1/2 + mu_j at the poles e_j. Each occupancy of the three gaps
has exactly one equilibrium, so a class of degree D is covered by
C(d+2, 2) independent solves with d = (D - |mu|) / 2.
"""

from itertools import permutations, product
from math import comb
from typing import Dict, List, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import BaseModel, ConfigDict, Field

from core.models import JointSpectrum, QuantumState, SystemSpec
from core.numerics import RootSystemProblem, solve_with_accessory
from core.spectra.base import SpectrumSolver, class_key
from core.utils.exceptions import InvalidProblem
from logger import Logger

MIN_POLE_GAP = 1e-6
# reported (lambda1, lambda2) are these multiples of the separation constants
LEMMA_SCALE = (-4.0, 6.0)

SymmetryClass4 = Tuple[int, int, int, int]

ALL_CLASSES: Tuple[SymmetryClass4, ...] = tuple(product((0, 1), repeat=4))


class GenLameParams(BaseModel):
    """Exponents and multiplicative-term corrections of the class-transformed equation."""

    model_config = ConfigDict(frozen=True)

    e: Tuple[float, float, float, float]
    gamma: Tuple[float, float, float, float] = Field(..., description="Exponents 1/2 + mu_j")
    u: Tuple[float, float, float] = Field(..., description="(u0, u1, u2) with U(z) = u0 z^2 + u1 z + u2")


def gen_lame_params(e: Sequence[float], mu: Sequence[int]) -> GenLameParams:
    """
    Parameters of the generalised Lame equation for one symmetry class.

    Factoring prod_j (z - e_j)^(mu_j / 2) out of the wave function raises the
    exponent at e_j to 3/2 and adds U(z) = sum_{i<j} c_ij prod_{k != i,j} (z - e_k)
    to the numerator, with c_ij = 2 mu_i mu_j + mu_i + mu_j.

    Args:
        e: Four strictly increasing semi-axes
        mu: Four parity bits

    Returns:
        GenLameParams with the exponents and (u0, u1, u2)
    """
    e = np.asarray(e, dtype=float)
    mu = np.asarray(mu, dtype=int)
    u = np.zeros(3)
    for i in range(4):
        for j in range(i + 1, 4):
            c = 2 * mu[i] * mu[j] + mu[i] + mu[j]
            if c == 0:
                continue
            k, l = [m for m in range(4) if m not in (i, j)]
            u += c * np.array([1.0, -(e[k] + e[l]), e[k] * e[l]])
    return GenLameParams(
        e=tuple(float(v) for v in e),
        gamma=tuple(0.5 + float(b) for b in mu),
        u=tuple(float(v) for v in u),
    )


def spectral_parameters(params: GenLameParams, q: np.ndarray) -> Tuple[float, float, float]:
    """
    Recover (E, lambda1, lambda2) from the accessory parameters q_j.

    lambda1 = -4 sum e_i e_j (q_k + q_m) and lambda2 = 4 sum e_i e_j e_k q_m,
    both summed over ordered tuples of pairwise distinct indices, plus the
    class shifts 4 u1 and 6 u2. With c(z) = 4 sum_j q_j prod_{i != j} (z - e_i)
    = c0 z^2 + c1 z + c2 this is lambda1 = -4 (c1 - u1), lambda2 = 6 (u2 - c2),
    and E = u0 - c0.
    """
    e = np.asarray(params.e)
    q = np.asarray(q, dtype=float)
    lam1 = lam2 = 0.0
    for i, j, k, m in permutations(range(4)):
        lam1 -= 4.0 * e[i] * e[j] * (q[k] + q[m])
        lam2 += 4.0 * e[i] * e[j] * e[k] * q[m]
    c = np.zeros(4)
    for j in range(4):
        c = c + 4.0 * q[j] * P.polyfromroots(np.delete(e, j))
    u0, u1, u2 = params.u
    return u0 - c[2], lam1 - LEMMA_SCALE[0] * u1, lam2 + LEMMA_SCALE[1] * u2


def separation_constants(values: Sequence[float]) -> Tuple[float, float]:
    """
    (lambda1, lambda2) of a state as the constants of -E z^2 + lambda1 z - lambda2.

    These are the eigenvalues of the two quadratic integrals and enter the
    action integrand; works on raw and on hbar-scaled values alike.
    """
    return values[0] / LEMMA_SCALE[0], values[1] / LEMMA_SCALE[1]


def occupancies(d: int) -> List[Tuple[int, int, int]]:
    """All (n1, n2, n3) with n1 + n2 + n3 = d, lexicographic."""
    return [(n1, n2, d - n1 - n2) for n1 in range(d + 1) for n2 in range(d + 1 - n1)]


def admissible_classes(degree: int) -> List[SymmetryClass4]:
    """The eight classes whose bit sum has the parity of D."""
    return [mu for mu in ALL_CLASSES if sum(mu) % 2 == degree % 2]


def class_counts(degree: int) -> Dict[str, int]:
    """C(d+2, 2) states per admissible class with d = (D - |mu|) / 2."""
    counts = {}
    for mu in admissible_classes(degree):
        k = sum(mu)
        if k <= degree:
            counts[class_key(mu)] = comb((degree - k) // 2 + 2, 2)
    return dict(sorted(counts.items()))


class EllipsoidalSolver(SpectrumSolver):
    """Joint spectrum (lambda1, lambda2) of the ellipsoidal system."""

    value_labels = ("lambda1", "lambda2")
    value_powers = (2, 2)

    def __init__(self, spec: SystemSpec, seed: int = 42):
        super().__init__(spec, seed)
        gaps = np.diff(spec.params)
        if np.min(gaps) <= MIN_POLE_GAP:
            raise InvalidProblem(
                f"Semi-axes {spec.params} are closer than {MIN_POLE_GAP}; use a degenerate system instead"
            )

    def solve_class(self, degree: int, mu: Sequence[int]) -> List[QuantumState]:
        """
        All states of one symmetry class.

        Args:
            degree: Total degree D with D >= |mu| and D = |mu| mod 2
            mu: Four parity bits

        Returns:
            C(d+2, 2) states, one per occupancy

        Raises:
            InvalidProblem: If D and mu are incompatible
            NonConvergence: If a root system fails, with the occupancy attached
        """
        mu = tuple(int(b) for b in mu)
        k = sum(mu)
        if degree < k or (degree - k) % 2:
            raise InvalidProblem(f"Degree {degree} is incompatible with class {mu}")
        d = (degree - k) // 2
        params = gen_lame_params(self.spec.params, mu)
        energy = self.energy(degree)

        states = []
        for n in occupancies(d):
            problem = RootSystemProblem(poles=params.e, exponents=params.gamma, occupancy=n)
            roots, q = solve_with_accessory(problem, seed=self.seed)
            e_value, lam1, lam2 = spectral_parameters(params, q)
            if abs(e_value - energy) > 1e-8 * max(1.0, energy):
                Logger.warning(
                    f"Energy {e_value:.10g} differs from D(D+2)={energy:g} for mu={mu}, n={n}",
                    "[EllipsoidalSolver]",
                )
            states.append(
                self._make_state(
                    degree,
                    mu=mu,
                    symmetry=mu,
                    numbers={"n1": n[0], "n2": n[1], "n3": n[2]},
                    values=(lam1, lam2),
                    roots=roots,
                    shape=self.spec.params,
                )
            )
        Logger.debug(f"D={degree} mu={class_key(mu)}: {len(states)} states", "[EllipsoidalSolver]")
        return states

    def states(self, degree: int) -> List[QuantumState]:
        out: List[QuantumState] = []
        for mu in admissible_classes(degree):
            if sum(mu) <= degree:
                out.extend(self.solve_class(degree, mu))
        return out

    def class_counts(self, degree: int) -> Dict[str, int]:
        return class_counts(degree)


def solve_class(spec: SystemSpec, degree: int, mu: Sequence[int], seed: int = 42) -> List[QuantumState]:
    """Functional form of EllipsoidalSolver.solve_class."""
    return EllipsoidalSolver(spec, seed).solve_class(degree, mu)


def full_spectrum(spec: SystemSpec, degree: int, seed: int = 42) -> JointSpectrum:
    """All (D+1)^2 ellipsoidal states of degree D with hbar = 1/(D+1)."""
    return EllipsoidalSolver(spec, seed).full_spectrum(degree)
