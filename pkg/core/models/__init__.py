from core.models.SystemSpec import SystemSpec, SystemKind, SYSTEM_KINDS
from core.models.QuantumState import QuantumState, JointSpectrum
from core.models.ActionTriple import ActionTriple
from core.models.Transport import LatticeCell, TransportResult
from core.models.AffineMap import AffineMap

__all__ = [
    "SystemSpec",
    "SystemKind",
    "SYSTEM_KINDS",
    "QuantumState",
    "JointSpectrum",
    "ActionTriple",
    "LatticeCell",
    "TransportResult",
    "AffineMap",
]
