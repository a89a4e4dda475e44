"""Prolate joint spectrum (m, lambda) from Heun polynomials in s1 and s3."""

from typing import Dict, List

from core.models import JointSpectrum, QuantumState, SystemSpec
from core.spectra.base import phase_parity
from core.spectra.heun import HeunParams, HeunSolver


def prolate_class_counts(degree: int) -> Dict[str, int]:
    """States per class (mu1, mu4); the same table serves the oblate classes (mu1, mu2)."""
    if degree % 2 == 0:
        h = degree // 2
        counts = {"00": (h + 1) ** 2, "10": (h + 1) * h, "01": (h + 1) * h, "11": h * h}
    else:
        h = (degree + 1) // 2
        counts = {"00": h * (h + 1), "10": h * h, "01": h * h, "11": h * (h - 1)}
    return {k: v for k, v in sorted(counts.items()) if v}


class ProlateSolver(HeunSolver):
    """
    Prolate system with axes (0, 1, 1, a).

    For each signed m and class (mu1, mu4) with D - |m| - mu1 - mu4 = 2d >= 0 the
    separated equation is Heun's with gamma = epsilon = 1/2, delta = 1 + |m| and
    q = (a|m| - lambda) / 4, giving d + 1 values of lambda.
    """

    value_labels = ("m", "lambda")
    value_powers = (1, 2)
    class_points = ("zero", "a")

    @property
    def a(self) -> float:
        return float(self.spec.params[0])

    def base_params(self, degree: int, m: int) -> HeunParams:
        k = abs(m)
        return HeunParams(
            a=self.a,
            alpha=0.5 * (k - degree),
            beta=0.5 * (degree + 2 + k),
            gamma=0.5,
            delta=1.0 + k,
            epsilon=0.5,
        )

    def states(self, degree: int) -> List[QuantumState]:
        a = self.a
        out: List[QuantumState] = []
        for m in range(-degree, degree + 1):
            base = self.base_params(degree, m)
            x2, x3 = phase_parity(m)
            for bits in self.class_bits():
                rest = degree - abs(m) - sum(bits)
                if rest < 0 or rest % 2:
                    continue
                out.extend(
                    self._states_from_heun(
                        degree,
                        base,
                        bits,
                        rest // 2,
                        to_values=lambda q, m=m: (m, a * abs(m) - 4.0 * q),
                        mu=(bits[0], x2, x3, bits[1]),
                        symmetry=bits,
                        numbers={"m": m, "d": rest // 2},
                    )
                )
        return out

    def class_counts(self, degree: int) -> Dict[str, int]:
        return prolate_class_counts(degree)


def prolate_spectrum(a: float, degree: int) -> JointSpectrum:
    """All (D+1)^2 prolate states of degree D."""
    return ProlateSolver(SystemSpec(kind="Prolate", params=(a,))).full_spectrum(degree)
