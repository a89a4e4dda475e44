"""Real eigenvalues of small tridiagonal recurrence matrices."""

from typing import Tuple

import numpy as np
import scipy.linalg
from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.utils.exceptions import ComplexSpectrum

REALNESS_TOL = 1e-9


class Tridiag(BaseModel):
    """Tridiagonal matrix stored by its three diagonals."""

    model_config = ConfigDict(frozen=True)

    sub: Tuple[float, ...] = Field((), description="Sub-diagonal, entry i sits at row i+1, column i")
    diag: Tuple[float, ...] = Field(..., min_length=1, description="Main diagonal")
    super: Tuple[float, ...] = Field((), description="Super-diagonal, entry i sits at row i, column i+1")

    @model_validator(mode="after")
    def validate_lengths(self):
        """Require consistent lengths and finite entries."""
        n = len(self.diag)
        if len(self.sub) != n - 1 or len(self.super) != n - 1:
            raise ValueError(f"off-diagonals must have length {n - 1}")
        if not np.all(np.isfinite(np.concatenate([self.sub, self.diag, self.super]))):
            raise ValueError("tridiagonal entries must be finite")
        return self

    @property
    def size(self) -> int:
        return len(self.diag)

    def to_dense(self) -> np.ndarray:
        matrix = np.diag(np.asarray(self.diag, dtype=float))
        if self.size > 1:
            matrix += np.diag(np.asarray(self.sub, dtype=float), k=-1)
            matrix += np.diag(np.asarray(self.super, dtype=float), k=1)
        return matrix


def eigen_real(t: Tridiag, return_vectors: bool = False):
    """
    Real eigenvalues of a (generally non-symmetric) tridiagonal matrix.

    The matrix is handed to LAPACK's balancing general eigensolver; the
    spectrum is asserted to be real afterwards.

    Args:
        t: Tridiagonal matrix
        return_vectors: Also return right eigenvectors as columns

    Returns:
        Sorted eigenvalues, or (eigenvalues, eigenvectors) with matching column order

    Raises:
        ComplexSpectrum: If an imaginary part exceeds the realness gate
    """
    matrix = t.to_dense()
    if return_vectors:
        values, vectors = scipy.linalg.eig(matrix, right=True)
    else:
        values = scipy.linalg.eigvals(matrix)
    scale = max(1.0, float(np.max(np.abs(values))))
    worst = float(np.max(np.abs(values.imag)))
    if worst > REALNESS_TOL * scale:
        raise ComplexSpectrum(f"Eigenvalue with imaginary part {worst:.3e} in a {t.size}x{t.size} matrix")
    order = np.argsort(values.real)
    if not return_vectors:
        return values.real[order]
    return values.real[order], vectors[:, order].real
