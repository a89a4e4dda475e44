"""Operator-matrix oracle: integrals on harmonic polynomials and calibration."""

from .operators import (
    MAX_ORACLE_DEGREE,
    OperatorMatrix,
    operator_weights,
    apply_operator,
    build_operator,
    laplacian_matrix,
    harmonic_subspace,
)
from .joint import (
    joint_spectrum_oracle,
    operator_pair_values,
    sort_pairs,
    match_pairs,
    calibrate,
    check_transport,
    rayleigh_pair,
)

__all__ = [
    "MAX_ORACLE_DEGREE",
    "OperatorMatrix",
    "operator_weights",
    "apply_operator",
    "build_operator",
    "laplacian_matrix",
    "harmonic_subspace",
    "joint_spectrum_oracle",
    "operator_pair_values",
    "sort_pairs",
    "match_pairs",
    "calibrate",
    "check_transport",
    "rayleigh_pair",
]
