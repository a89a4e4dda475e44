"""Joint spectrum solvers for the separable systems on S^3 and S^2."""

from .base import MAX_DEGREE, SpectrumSolver, class_key, phase_parity
from .ellipsoidal import (
    EllipsoidalSolver,
    GenLameParams,
    gen_lame_params,
    separation_constants,
    solve_class,
    full_spectrum,
)
from .heun import HeunParams, HeunSolver, heun_matrix, heun_spectrum
from .prolate import ProlateSolver, prolate_spectrum, prolate_class_counts
from .oblate import OblateSolver, oblate_spectrum, pair_gaps
from .lame import LameSolver, lame_spectrum, lame_class_counts
from .s2_ellipsoidal import S2EllipsoidalSolver, s2_ellipsoidal_spectrum
from .closedform import (
    SphericalSolver,
    CylindricalSolver,
    S2SphericalSolver,
    spherical_spectrum,
    cylindrical_spectrum,
    s2_spherical_spectrum,
)
from .labels import lame_function_label, state_label, class_colour
from .factory import create_spectrum_solver, create_system_spec

__all__ = [
    "MAX_DEGREE",
    "SpectrumSolver",
    "class_key",
    "phase_parity",
    "EllipsoidalSolver",
    "GenLameParams",
    "gen_lame_params",
    "separation_constants",
    "solve_class",
    "full_spectrum",
    "HeunParams",
    "HeunSolver",
    "heun_matrix",
    "heun_spectrum",
    "ProlateSolver",
    "prolate_spectrum",
    "prolate_class_counts",
    "OblateSolver",
    "oblate_spectrum",
    "pair_gaps",
    "LameSolver",
    "lame_spectrum",
    "lame_class_counts",
    "S2EllipsoidalSolver",
    "s2_ellipsoidal_spectrum",
    "SphericalSolver",
    "CylindricalSolver",
    "S2SphericalSolver",
    "spherical_spectrum",
    "cylindrical_spectrum",
    "s2_spherical_spectrum",
    "lame_function_label",
    "state_label",
    "class_colour",
    "create_spectrum_solver",
    "create_system_spec",
]
