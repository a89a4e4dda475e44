from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field

from core.utils.exceptions import InvalidProblem

from .SystemSpec import SystemKind


class QuantumState(BaseModel):
    """One joint eigenstate: quantum numbers plus its pair of eigenvalues."""

    system: SystemKind
    degree: int = Field(..., ge=0, description="Total degree D (the degree ell on S^2)")
    mu: Tuple[int, ...] = Field(..., description="Parity bits about each Cartesian axis")
    symmetry: Tuple[int, ...] = Field(..., description="Symmetry class bits used by the solver (e.g. (mu1, mu4) for prolate)")
    numbers: Dict[str, int] = Field(default_factory=dict, description="Discrete quantum numbers")
    values: Tuple[float, float] = Field(..., description="Raw joint eigenvalues")
    scaled: Tuple[float, float] = Field(..., description="Eigenvalues scaled by powers of hbar")
    hbar: float = Field(..., gt=0.0)
    energy: float = Field(..., description="Laplace-Beltrami eigenvalue E")
    roots: Optional[Tuple[float, ...]] = None  # Heine-Stieltjes roots (ellipsoidal)
    coefficients: Optional[Tuple[float, ...]] = None  # Heun polynomial coefficients c_0..c_d
    shape: Tuple[float, ...] = ()  # normalised axes used by the solver

    @property
    def key(self) -> Tuple:
        return (self.degree, self.symmetry, tuple(self.numbers.values()))

    @property
    def class_bits(self) -> str:
        return "".join(str(b) for b in self.symmetry)

    def permuted(self, perm: Sequence[int]) -> "QuantumState":
        """
        The same state with Cartesian axis i taken from axis perm[i].

        Parity bits follow the axes; symmetry bits follow them only when they
        are the per-axis parities themselves.
        """
        if sorted(perm) != list(range(len(self.mu))):
            raise InvalidProblem(f"{tuple(perm)} is not a permutation of {len(self.mu)} axes")
        mu = tuple(self.mu[p] for p in perm)
        symmetry = mu if self.symmetry == self.mu else self.symmetry
        return self.model_copy(update={"mu": mu, "symmetry": symmetry})

    class Config:
        json_schema_extra = {
            "example": {
                "system": "Prolate",
                "degree": 2,
                "mu": [0, 0, 0, 0],
                "symmetry": [0, 0],
                "numbers": {"m": 0, "d": 1, "k": 0},
                "values": [0.0, 2.4],
                "scaled": [0.0, 0.2667],
                "hbar": 0.3333,
                "energy": 8.0,
            }
        }


class JointSpectrum(BaseModel):
    """All states of one system at fixed degree, ordered by state key."""

    system: SystemKind
    params: Tuple[float, ...] = ()
    degree: int = Field(..., ge=0)
    hbar: float = Field(..., gt=0.0)
    value_labels: Tuple[str, str]
    states: List[QuantumState] = Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.states)

    def points(self, scaled: bool = True) -> np.ndarray:
        """Eigenvalue pairs as an (N, 2) array."""
        if not self.states:
            return np.empty((0, 2))
        return np.array([s.scaled if scaled else s.values for s in self.states], dtype=float)

    def class_counts(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for state in self.states:
            counts[state.class_bits] = counts.get(state.class_bits, 0) + 1
        return dict(sorted(counts.items()))

    def filter_classes(self, classes: Optional[Iterable[Iterable[int]]]) -> "JointSpectrum":
        """Restrict to states whose symmetry class is in `classes` (None keeps all)."""
        if classes is None:
            return self
        wanted = {tuple(int(b) for b in c) for c in classes}
        return self.model_copy(update={"states": [s for s in self.states if s.symmetry in wanted]})

    def permuted(self, perm: Sequence[int]) -> "JointSpectrum":
        return self.model_copy(update={"states": [s.permuted(perm) for s in self.states]})

    def sorted(self) -> "JointSpectrum":
        return self.model_copy(update={"states": sorted(self.states, key=lambda s: s.key)})
