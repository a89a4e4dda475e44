from typing import Tuple

import numpy as np
from pydantic import BaseModel, Field


class AffineMap(BaseModel):
    """Map y = A x + b between two conventions of a pair of eigenvalues."""

    matrix: Tuple[Tuple[float, float], Tuple[float, float]] = ((1.0, 0.0), (0.0, 1.0))
    offset: Tuple[float, float] = (0.0, 0.0)
    residual: float = Field(0.0, ge=0.0, description="Max relative fit residual over the calibration points")
    points: int = Field(0, ge=0, description="Number of calibration points")

    def apply(self, points) -> np.ndarray:
        """Map an (N, 2) array of pairs."""
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        return pts @ np.asarray(self.matrix).T + np.asarray(self.offset)

    def is_identity(self, tol: float = 1e-8) -> bool:
        return bool(
            np.allclose(self.matrix, np.eye(2), atol=tol) and np.allclose(self.offset, 0.0, atol=tol)
        )
