"""
Heun polynomials by truncated three-term recurrence.

A power series sum_i c_i z^i solving Heun's equation with singular points
0, 1, a obeys

    A_i c_{i+1} - B_i c_i + C_i c_{i-1} = q c_i,
    A_i = a (i+1)(i+gamma),
    B_i = i [(i-1+gamma)(a+1) + a delta + epsilon],
    C_i = (i-1+alpha)(i-1+beta),

and terminates at degree d when alpha = -d, because C_{d+1} then vanishes.
The admissible accessory parameters q are the eigenvalues of the (d+1)x(d+1)
tridiagonal matrix, and the eigenvectors are the coefficients c_i.

Symmetry classes factor z^(1-gamma), (z-1)^(1-delta) or (z-a)^(1-epsilon)
out of the solution. Each factor flips one exponent and shifts alpha, beta
and q; the shifts are applied one singular point at a time.
"""

from typing import Dict, List, Literal, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from core.models import QuantumState
from core.numerics import Tridiag, eigen_real
from core.spectra.base import SpectrumSolver
from core.utils.exceptions import TruncationViolated

FUCHS_TOL = 1e-12
TRUNCATION_TOL = 1e-9

SingularPoint = Literal["zero", "one", "a"]


class HeunParams(BaseModel):
    """Parameters of Heun's equation; q holds the accumulated class shift."""

    model_config = ConfigDict(frozen=True)

    a: float
    q: float = 0.0
    alpha: float
    beta: float
    gamma: float
    delta: float
    epsilon: float

    @model_validator(mode="after")
    def validate_fuchs(self):
        """alpha + beta + 1 = gamma + delta + epsilon."""
        lhs = self.alpha + self.beta + 1.0
        rhs = self.gamma + self.delta + self.epsilon
        if abs(lhs - rhs) > FUCHS_TOL * max(1.0, abs(lhs)):
            raise ValueError(f"Fuchs relation violated: {lhs} != {rhs}")
        return self

    def flip(self, point: SingularPoint) -> "HeunParams":
        """Factor out the nonzero local exponent at one finite singular point."""
        a, g, d, e = self.a, self.gamma, self.delta, self.epsilon
        if point == "zero":
            shift, exponent = (1.0 - g) * (a * d + e), g
            update = {"gamma": 2.0 - g}
        elif point == "one":
            shift, exponent = a * g * (1.0 - d), d
            update = {"delta": 2.0 - d}
        else:
            shift, exponent = g * (1.0 - e), e
            update = {"epsilon": 2.0 - e}
        return self.model_copy(
            update={
                **update,
                "alpha": self.alpha + 1.0 - exponent,
                "beta": self.beta + 1.0 - exponent,
                "q": self.q + shift,
            }
        )

    def flip_all(self, points: Sequence[SingularPoint]) -> "HeunParams":
        params = self
        for point in points:
            params = params.flip(point)
        return params


def heun_matrix(p: HeunParams, d: int) -> Tridiag:
    """
    Recurrence matrix whose eigenvalues are the q admitting a degree-d polynomial.

    Args:
        p: Heun parameters (already class shifted)
        d: Polynomial degree

    Returns:
        (d+1)x(d+1) Tridiag; row 0 encodes a gamma c_1 = q c_0

    Raises:
        TruncationViolated: If alpha != -d
    """
    if d < 0 or abs(p.alpha + d) > TRUNCATION_TOL:
        raise TruncationViolated(f"Series does not terminate at degree {d}: alpha={p.alpha}")
    i = np.arange(d + 1, dtype=float)
    diag = -i * ((i - 1.0 + p.gamma) * (p.a + 1.0) + p.a * p.delta + p.epsilon)
    upper = p.a * (i[:-1] + 1.0) * (i[:-1] + p.gamma)
    lower = (i[1:] - 1.0 + p.alpha) * (i[1:] - 1.0 + p.beta)
    return Tridiag(sub=tuple(lower), diag=tuple(diag), super=tuple(upper))


def heun_spectrum(p: HeunParams, d: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    Accessory parameters of the unshifted equation and polynomial coefficients.

    Returns:
        Tuple (q, coefficients) where q is sorted ascending with the class shift
        removed and coefficients[:, k] holds c_0..c_d of the k-th polynomial
    """
    values, vectors = eigen_real(heun_matrix(p, d), return_vectors=True)
    vectors = np.atleast_2d(vectors)
    # c_0 != 0 for every nonzero solution
    vectors = vectors / vectors[0, :]
    return values - p.q, vectors


class HeunSolver(SpectrumSolver):
    """
    Shared enumeration for systems reduced to Heun's equation.

    Subclasses provide the normalised singular point a, the map from class
    bits to singular points and the construction of the base parameters.
    """

    # singular point flipped by each symmetry-class bit
    class_points: Tuple[SingularPoint, ...] = ()

    @property
    def a(self) -> float:
        raise NotImplementedError

    def class_bits(self) -> List[Tuple[int, ...]]:
        n = len(self.class_points)
        return [tuple((k >> (n - 1 - j)) & 1 for j in range(n)) for k in range(2**n)]

    def shifted(self, base: HeunParams, bits: Sequence[int]) -> HeunParams:
        return base.flip_all([pt for pt, b in zip(self.class_points, bits) if b])

    def solve_heun(self, base: HeunParams, bits: Sequence[int], d: int) -> Tuple[np.ndarray, np.ndarray]:
        return heun_spectrum(self.shifted(base, bits), d)

    def _states_from_heun(
        self,
        degree: int,
        base: HeunParams,
        bits: Sequence[int],
        d: int,
        to_values,
        mu: Sequence[int],
        symmetry: Sequence[int],
        numbers: Dict[str, int],
    ) -> List[QuantumState]:
        q_values, coefficients = self.solve_heun(base, bits, d)
        return [
            self._make_state(
                degree,
                mu=mu,
                symmetry=symmetry,
                numbers={**numbers, "k": k},
                values=to_values(q),
                coefficients=coefficients[:, k],
                shape=(0.0, 1.0, self.a),
            )
            for k, q in enumerate(q_values)
        ]
