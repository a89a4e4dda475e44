"""Oblate joint spectrum (m, lambda) from Heun polynomials in s1 and s2."""

from typing import Dict, List

from core.models import JointSpectrum, QuantumState, SystemSpec
from core.spectra.base import phase_parity
from core.spectra.heun import HeunParams, HeunSolver
from core.spectra.prolate import prolate_class_counts
from core.utils.exceptions import InvalidProblem


class OblateSolver(HeunSolver):
    """
    Oblate system with axes (0, 1, a, a).

    Heun's equation with gamma = delta = 1/2, epsilon = 1 + |m| and
    q = (|m| - lambda) / 4; the class bits (mu1, mu2) flip the exponents at
    0 and 1 and the angle lives in the (x3, x4) plane.
    """

    value_labels = ("m", "lambda")
    value_powers = (1, 2)
    class_points = ("zero", "one")

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
            delta=0.5,
            epsilon=1.0 + k,
        )

    def states(self, degree: int) -> List[QuantumState]:
        out: List[QuantumState] = []
        for m in range(-degree, degree + 1):
            base = self.base_params(degree, m)
            x3, x4 = phase_parity(m)
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
                        to_values=lambda q, m=m: (m, abs(m) - 4.0 * q),
                        mu=(bits[0], bits[1], x3, x4),
                        symmetry=bits,
                        numbers={"m": m, "d": rest // 2},
                    )
                )
        return out

    def class_counts(self, degree: int) -> Dict[str, int]:
        return prolate_class_counts(degree)


def oblate_spectrum(a: float, degree: int) -> JointSpectrum:
    """All (D+1)^2 oblate states of degree D."""
    return OblateSolver(SystemSpec(kind="Oblate", params=(a,))).full_spectrum(degree)


def pair_gaps(spectrum: JointSpectrum) -> List[Dict]:
    """
    Gaps between neighbouring lambda values in every column m >= 0.

    Each row carries the two classes, both values and the gap relative to
    the mean spacing of its column; near-degenerate pairs show up as small
    ratios. No threshold is applied.

    Raises:
        InvalidProblem: If the spectrum is not labelled by (m, lambda)
    """
    if spectrum.value_labels != ("m", "lambda"):
        raise InvalidProblem(f"Pair gaps need (m, lambda) values, got {spectrum.value_labels}")
    rows: List[Dict] = []
    columns: Dict[int, List[QuantumState]] = {}
    for state in spectrum.states:
        if state.numbers["m"] >= 0:
            columns.setdefault(state.numbers["m"], []).append(state)
    for m, states in sorted(columns.items()):
        states = sorted(states, key=lambda s: s.values[1])
        if len(states) < 2:
            continue
        spacing = (states[-1].values[1] - states[0].values[1]) / (len(states) - 1)
        for low, high in zip(states, states[1:]):
            gap = high.values[1] - low.values[1]
            rows.append(
                {
                    "m": m,
                    "lower_class": low.class_bits,
                    "upper_class": high.class_bits,
                    "lambda_lower": low.values[1],
                    "lambda_upper": high.values[1],
                    "gap": gap,
                    "gap_scaled": high.scaled[1] - low.scaled[1],
                    "ratio": gap / spacing if spacing > 0.0 else 0.0,
                }
            )
    return rows
