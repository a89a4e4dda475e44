"""
Lame joint spectrum (f, g) on S^3.

The x1 factor is a Gegenbauer polynomial C_n^{2d+1+U}; the (s2, s3) factor is a
Lame polynomial of degree d in the class transformed Heun form with U = mu2 +
mu3 + mu4, so that D = n + 2d + U. f follows in closed form from

    (f - E + U(U+1)) / 4 = -d (d + 1/2 + U)

and g from the recurrence eigenvalues, q = -g / 4 in the normalised axes
(0, 1, a).
"""

from itertools import product
from typing import Dict, List

from core.geometry import normalized_axes
from core.models import JointSpectrum, QuantumState, SystemSpec
from core.spectra.base import class_key
from core.spectra.heun import HeunParams, HeunSolver


def lame_f(degree: int, d: int, u: int) -> float:
    """Eigenvalue f of F = l12^2 + l13^2 + l14^2."""
    energy = degree * (degree + 2)
    return energy - u * (u + 1) - 4.0 * d * (d + 0.5 + u)


def lame_class_counts(degree: int) -> Dict[str, int]:
    """States per class (mu1; mu2, mu3, mu4), mu1 being the parity of the Gegenbauer degree."""
    counts = {}
    for bits in product((0, 1), repeat=3):
        u = sum(bits)
        if u > degree:
            continue
        top = (degree - u) // 2
        counts[class_key(((degree - u) % 2, *bits))] = (top + 1) * (top + 2) // 2
    return dict(sorted(counts.items()))


class LameSolver(HeunSolver):
    """Lame system with axes f = (f1, f2, f3), solved in the normalised axes (0, 1, a)."""

    value_labels = ("f", "g")
    value_powers = (2, 2)
    class_points = ("zero", "one", "a")

    def __init__(self, spec: SystemSpec, seed: int = 42):
        super().__init__(spec, seed)
        axes, self.offset, self.scale = normalized_axes(spec)
        self._a = axes[2]

    @property
    def a(self) -> float:
        return self._a

    def base_params(self, d: int, u: int) -> HeunParams:
        ell = 2 * d + u
        return HeunParams(a=self.a, alpha=-0.5 * ell, beta=0.5 + 0.5 * ell, gamma=0.5, delta=0.5, epsilon=0.5)

    def states(self, degree: int) -> List[QuantumState]:
        energy = self.energy(degree)
        out: List[QuantumState] = []
        for bits in self.class_bits():
            u = sum(bits)
            for d in range((degree - u) // 2 + 1) if u <= degree else ():
                n = degree - 2 * d - u
                f = lame_f(degree, d, u)
                # g in the user's axes from the normalised one, g' = -4 q
                shift = self.offset * (energy - f)
                out.extend(
                    self._states_from_heun(
                        degree,
                        self.base_params(d, u),
                        bits,
                        d,
                        to_values=lambda q, f=f, shift=shift: (f, -4.0 * q * self.scale + shift),
                        mu=(n % 2, *bits),
                        symmetry=(n % 2, *bits),
                        numbers={"n": n, "d": d},
                    )
                )
        return out

    def class_counts(self, degree: int) -> Dict[str, int]:
        return lame_class_counts(degree)


def lame_spectrum(f: tuple, degree: int) -> JointSpectrum:
    """All (D+1)^2 Lame states of degree D."""
    return LameSolver(SystemSpec(kind="Lame", params=tuple(f))).full_spectrum(degree)
