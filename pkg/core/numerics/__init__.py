"""Numerical kernels: root systems, real eigenvalues, quadrature, classical polynomials."""

from .roots import RootSystemProblem, solve_root_system, solve_with_accessory, accessory_parameters
from .eigen import Tridiag, eigen_real
from .quadrature import QuadratureSpec, TanhSinh, integrate
from .classical import eval_classical, classical_coefficients

__all__ = [
    "RootSystemProblem",
    "solve_root_system",
    "solve_with_accessory",
    "accessory_parameters",
    "Tridiag",
    "eigen_real",
    "QuadratureSpec",
    "TanhSinh",
    "integrate",
    "eval_classical",
    "classical_coefficients",
]
