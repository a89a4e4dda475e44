from typing import Any, Dict, Union

from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from core.models import SYSTEM_KINDS, SystemSpec
from core.utils import ConfigValidator, InvalidProblem
from logger import Logger

from .base import SpectrumSolver
from .closedform import CylindricalSolver, S2SphericalSolver, SphericalSolver
from .ellipsoidal import EllipsoidalSolver
from .lame import LameSolver
from .oblate import OblateSolver
from .prolate import ProlateSolver
from .s2_ellipsoidal import S2EllipsoidalSolver

SOLVERS = {
    "Ellipsoidal": EllipsoidalSolver,
    "Prolate": ProlateSolver,
    "Oblate": OblateSolver,
    "Lame": LameSolver,
    "Spherical23": SphericalSolver,
    "Cylindrical": CylindricalSolver,
    "S2Ellipsoidal": S2EllipsoidalSolver,
    "S2Spherical": S2SphericalSolver,
}


def create_system_spec(config: Union[SystemSpec, BaseModel, Dict[str, Any]]) -> SystemSpec:
    """
    Build a SystemSpec from a config in either accepted layout.

    Raises:
        ValidationError: If the system key is missing or unknown
        InvalidProblem: If the parameters violate the constraints of the kind
    """
    if isinstance(config, SystemSpec):
        return config
    kind, params = ConfigValidator.extract_system_config(config, "System", SYSTEM_KINDS)
    try:
        return SystemSpec(kind=kind, params=params)
    except PydanticValidationError as e:
        raise InvalidProblem(f"Invalid {kind} parameters {params}: {e.errors()[0]['msg']}") from e


def create_spectrum_solver(config: Union[SystemSpec, BaseModel, Dict[str, Any]], seed: int = 42) -> SpectrumSolver:
    """
    Factory function to create a spectrum solver from config.

    Args:
        config: A SystemSpec, {"kind": ..., "params": [...]} or the system name as key
        seed: Seed for the stochastic root-system kernel

    Returns:
        SpectrumSolver instance bound to the system

    Example:
        solver = create_spectrum_solver({"Prolate": {"params": [2.4]}})
        solver = create_spectrum_solver({"kind": "Ellipsoidal", "params": [1, 2, 5, 8]})
    """
    spec = create_system_spec(config)
    Logger.debug(f"Creating spectrum solver: {spec.label()}", "[SpectrumSolverFactory]")
    return SOLVERS[spec.kind](spec, seed=seed)
