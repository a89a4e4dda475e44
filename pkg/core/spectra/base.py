from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Sequence, Tuple

from core.models import JointSpectrum, QuantumState, SystemSpec
from core.utils.exceptions import InvalidProblem

MAX_DEGREE = 64


class SpectrumSolver(ABC):
    """
    Abstract base class for joint spectrum solvers.

    A solver is bound to one SystemSpec. Subclasses enumerate the states of a
    fixed degree; the base class attaches hbar and the scaled eigenvalues and
    assembles the JointSpectrum ordered by state key.
    """

    value_labels: Tuple[str, str] = ("lambda1", "lambda2")
    # powers of hbar applied to each raw eigenvalue for presentation
    value_powers: Tuple[int, int] = (2, 2)
    on_s2: bool = False

    def __init__(self, spec: SystemSpec, seed: int = 42):
        """
        Initialize the solver.

        Args:
            spec: The coordinate system and its shape parameters
            seed: Seed forwarded to stochastic kernels (root system jitter)
        """
        self.spec = spec
        self.seed = seed

    def hbar(self, degree: int) -> float:
        """hbar = 1/(D+1), so that 1/hbar^2 counts the states of one degree on S^3."""
        return 1.0 / (degree + 1)

    def energy(self, degree: int) -> float:
        """Laplace-Beltrami eigenvalue: D(D+2) on S^3, l(l+1) on S^2."""
        return float(degree * (degree + 1)) if self.on_s2 else float(degree * (degree + 2))

    def state_count(self, degree: int) -> int:
        return 2 * degree + 1 if self.on_s2 else (degree + 1) ** 2

    @abstractmethod
    def states(self, degree: int) -> List[QuantumState]:
        """
        Enumerate every joint eigenstate of the given degree.

        Args:
            degree: Total degree D (the degree l on S^2)

        Returns:
            List of QuantumState in any order
        """
        pass

    @abstractmethod
    def class_counts(self, degree: int) -> Dict[str, int]:
        """
        Number of states per symmetry class predicted by the counting formulas.

        Returns:
            Mapping from class bit string (e.g. "0110") to count, zero counts omitted
        """
        pass

    def full_spectrum(self, degree: int) -> JointSpectrum:
        """
        Joint spectrum of one degree, ordered by state key.

        Raises:
            InvalidProblem: If the degree is negative or above the supported cap
        """
        self._check_degree(degree)
        spectrum = JointSpectrum(
            system=self.spec.kind,
            params=self.spec.params,
            degree=degree,
            hbar=self.hbar(degree),
            value_labels=self.value_labels,
            states=self.states(degree),
        )
        return spectrum.sorted()

    def _check_degree(self, degree: int):
        if degree < 0:
            raise InvalidProblem(f"Degree must be nonnegative, got {degree}")
        if degree > MAX_DEGREE:
            raise InvalidProblem(f"Degree {degree} exceeds the supported maximum {MAX_DEGREE}")

    def _make_state(
        self,
        degree: int,
        mu: Sequence[int],
        symmetry: Sequence[int],
        numbers: Dict[str, int],
        values: Tuple[float, float],
        roots: Optional[Sequence[float]] = None,
        coefficients: Optional[Sequence[float]] = None,
        shape: Sequence[float] = (),
    ) -> QuantumState:
        hbar = self.hbar(degree)
        scaled = tuple(float(v) * hbar**p for v, p in zip(values, self.value_powers))
        return QuantumState(
            system=self.spec.kind,
            degree=degree,
            mu=tuple(int(b) for b in mu),
            symmetry=tuple(int(b) for b in symmetry),
            numbers=numbers,
            values=(float(values[0]), float(values[1])),
            scaled=scaled,
            hbar=hbar,
            energy=self.energy(degree),
            roots=None if roots is None else tuple(float(z) for z in roots),
            coefficients=None if coefficients is None else tuple(float(c) for c in coefficients),
            shape=tuple(float(v) for v in shape),
        )


def phase_parity(m: int) -> Tuple[int, int]:
    """
    Parities of the two plane coordinates in the real part (m >= 0) or
    imaginary part (m < 0) of (x_a + i x_b)^|m|.
    """
    k = abs(m)
    if m >= 0:
        return k % 2, 0
    return (k - 1) % 2, 1


def class_key(bits: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in bits)
