from math import gcd
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

Vector2 = Tuple[float, float]


class LatticeCell(BaseModel):
    """A base point of the joint spectrum and two lattice vectors attached to it."""

    base: Vector2
    v1: Vector2
    v2: Vector2

    @model_validator(mode="after")
    def validate_basis(self):
        if abs(self.det) <= 1e-14:
            raise ValueError("lattice vectors v1, v2 are parallel")
        return self

    @property
    def det(self) -> float:
        return self.v1[0] * self.v2[1] - self.v1[1] * self.v2[0]

    def basis(self) -> np.ndarray:
        """Rows are v1 and v2."""
        return np.array([self.v1, self.v2], dtype=float)


class TransportResult(BaseModel):
    """Integer basis change after carrying a cell around a closed loop."""

    matrix: Tuple[Tuple[int, int], Tuple[int, int]] = Field(
        ..., description="Rows express the transported v1, v2 in the initial basis"
    )
    cells: List[LatticeCell] = Field(default_factory=list, description="Cell at every waypoint")
    refinements: int = Field(0, ge=0, description="Number of loop refinements needed")

    @model_validator(mode="after")
    def validate_unimodular(self):
        (a, b), (c, d) = self.matrix
        if a * d - b * c != 1:
            raise ValueError(f"transport matrix {self.matrix} is not unimodular")
        return self

    @property
    def omega(self) -> int:
        """Monodromy index: gcd of the entries of M - I (0 for the identity)."""
        (a, b), (c, d) = self.matrix
        return gcd(gcd(abs(a - 1), abs(b)), gcd(abs(c), abs(d - 1)))

    @property
    def is_identity(self) -> bool:
        return self.matrix == ((1, 0), (0, 1))
