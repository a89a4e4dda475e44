"""
Closed-form joint spectra: spherical and cylindrical systems on S^3, spherical on S^2.

These are integer enumerations plus an analytic second eigenvalue; they never
call the numerics package.
"""

from collections import Counter
from typing import Dict, List

from core.models import JointSpectrum, QuantumState, SystemSpec
from core.spectra.base import SpectrumSolver, phase_parity
from core.utils.exceptions import InvalidProblem


class ClosedFormSolver(SpectrumSolver):
    """Counts come from the enumeration itself."""

    def class_counts(self, degree: int) -> Dict[str, int]:
        return dict(sorted(Counter(s.class_bits for s in self.states(degree)).items()))


class SphericalSolver(ClosedFormSolver):
    """
    Spherical-23 system: Gegenbauer degree n in x1 and an S^2 harmonic of
    degree l in (x2, x3, x4) with D = n + l. Values (m, lambda) with
    lambda = D(D+2) - l(l+1).
    """

    value_labels = ("m", "lambda")
    value_powers = (1, 2)

    def states(self, degree: int) -> List[QuantumState]:
        energy = self.energy(degree)
        out = []
        for ell in range(degree + 1):
            n = degree - ell
            for m in range(-ell, ell + 1):
                x3, x4 = phase_parity(m)
                mu = (n % 2, (ell - abs(m)) % 2, x3, x4)
                out.append(
                    self._make_state(
                        degree,
                        mu=mu,
                        symmetry=mu,
                        numbers={"n": n, "l": ell, "m": m},
                        values=(m, energy - ell * (ell + 1)),
                    )
                )
        return out


class CylindricalSolver(ClosedFormSolver):
    """Cylindrical system: Jacobi P_d^(|m1|,|m2|) with D = 2d + |m1| + |m2|; values (m1, m2)."""

    value_labels = ("m1", "m2")
    value_powers = (1, 1)

    def states(self, degree: int) -> List[QuantumState]:
        out = []
        for m1 in range(-degree, degree + 1):
            for m2 in range(-(degree - abs(m1)), degree - abs(m1) + 1):
                rest = degree - abs(m1) - abs(m2)
                if rest % 2:
                    continue
                mu = (*phase_parity(m1), *phase_parity(m2))
                out.append(
                    self._make_state(
                        degree,
                        mu=mu,
                        symmetry=mu,
                        numbers={"d": rest // 2, "m1": m1, "m2": m2},
                        values=(m1, m2),
                    )
                )
        return out


class S2SphericalSolver(ClosedFormSolver):
    """Spherical coordinates on S^2 with polar axis x1; values (m, E) with E = l(l+1)."""

    value_labels = ("m", "E")
    value_powers = (1, 2)
    on_s2 = True

    def states(self, degree: int) -> List[QuantumState]:
        energy = self.energy(degree)
        out = []
        for m in range(-degree, degree + 1):
            mu = ((degree - abs(m)) % 2, *phase_parity(m))
            out.append(
                self._make_state(
                    degree,
                    mu=mu,
                    symmetry=mu,
                    numbers={"l": degree, "m": m},
                    values=(m, energy),
                )
            )
        return out


def spherical_spectrum(degree: int) -> JointSpectrum:
    """All (D+1)^2 spherical-23 states of degree D."""
    return SphericalSolver(SystemSpec(kind="Spherical23")).full_spectrum(degree)


def cylindrical_spectrum(degree: int) -> JointSpectrum:
    """All (D+1)^2 cylindrical states of degree D."""
    return CylindricalSolver(SystemSpec(kind="Cylindrical")).full_spectrum(degree)


def s2_spherical_spectrum(lmax: int) -> List[QuantumState]:
    """The 2l+1 states of every degree l = 0..lmax, each scaled with its own hbar."""
    if lmax < 0:
        raise InvalidProblem(f"lmax must be nonnegative, got {lmax}")
    solver = S2SphericalSolver(SystemSpec(kind="S2Spherical"))
    out: List[QuantumState] = []
    for ell in range(lmax + 1):
        out.extend(solver.full_spectrum(ell).states)
    return out
