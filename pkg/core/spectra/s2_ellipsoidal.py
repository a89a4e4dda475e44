"""Ellipsoidal joint spectrum on S^2: Lame polynomials in s1 and s2."""

from itertools import product
from typing import Dict, List

from core.geometry import normalized_axes
from core.models import JointSpectrum, QuantumState, SystemSpec
from core.spectra.base import class_key
from core.spectra.heun import HeunParams, HeunSolver


def s2_class_counts(ell: int) -> Dict[str, int]:
    """d + 1 states per class mu with |mu| = ell mod 2, d = (ell - |mu|) / 2."""
    counts = {}
    for bits in product((0, 1), repeat=3):
        u = sum(bits)
        if u <= ell and (ell - u) % 2 == 0:
            counts[class_key(bits)] = (ell - u) // 2 + 1
    return dict(sorted(counts.items()))


class S2EllipsoidalSolver(HeunSolver):
    """
    Ellipsoidal coordinates on S^2 with axes e = (e1, e2, e3).

    Both separated equations are the Lame equation with E = l(l+1); in the
    normalised axes (0, 1, a) it is Heun's equation with q = -lambda' / 4.
    """

    value_labels = ("E", "lambda")
    value_powers = (2, 2)
    class_points = ("zero", "one", "a")
    on_s2 = True

    def __init__(self, spec: SystemSpec, seed: int = 42):
        super().__init__(spec, seed)
        axes, self.offset, self.scale = normalized_axes(spec)
        self._a = axes[2]

    @property
    def a(self) -> float:
        return self._a

    def states(self, degree: int) -> List[QuantumState]:
        energy = self.energy(degree)
        base = HeunParams(
            a=self.a, alpha=-0.5 * degree, beta=0.5 * (degree + 1), gamma=0.5, delta=0.5, epsilon=0.5
        )
        shift = self.offset * energy
        out: List[QuantumState] = []
        for bits in self.class_bits():
            rest = degree - sum(bits)
            if rest < 0 or rest % 2:
                continue
            out.extend(
                self._states_from_heun(
                    degree,
                    base,
                    bits,
                    rest // 2,
                    to_values=lambda q: (energy, -4.0 * q * self.scale + shift),
                    mu=bits,
                    symmetry=bits,
                    numbers={"d": rest // 2},
                )
            )
        return out

    def class_counts(self, degree: int) -> Dict[str, int]:
        return s2_class_counts(degree)


def s2_ellipsoidal_spectrum(e: tuple, ell: int) -> JointSpectrum:
    """All 2l+1 states of the S^2 ellipsoidal system at degree l."""
    return S2EllipsoidalSolver(SystemSpec(kind="S2Ellipsoidal", params=tuple(e))).full_spectrum(ell)
