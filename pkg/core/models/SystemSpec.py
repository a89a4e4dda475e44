from typing import Literal, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

SystemKind = Literal[
    "Ellipsoidal",
    "Prolate",
    "Oblate",
    "Lame",
    "Spherical23",
    "Cylindrical",
    "S2Ellipsoidal",
    "S2Spherical",
]

SYSTEM_KINDS: Tuple[str, ...] = SystemKind.__args__

# number of shape parameters per system
PARAM_COUNTS = {
    "Ellipsoidal": 4,
    "Prolate": 1,
    "Oblate": 1,
    "Lame": 3,
    "Spherical23": 0,
    "Cylindrical": 0,
    "S2Ellipsoidal": 3,
    "S2Spherical": 0,
}


class SystemSpec(BaseModel):
    """A separable coordinate system on S^3 or S^2 with its shape parameters."""

    kind: SystemKind
    params: Tuple[float, ...] = Field(
        (),
        description="Semi-axes e (Ellipsoidal, S2Ellipsoidal), a (Prolate, Oblate) or f (Lame)",
    )

    @model_validator(mode="after")
    def validate_params(self):
        """Check the parameter count and the ordering constraints of the kind."""
        expected = PARAM_COUNTS[self.kind]
        if len(self.params) != expected:
            raise ValueError(f"{self.kind} takes {expected} parameters, got {len(self.params)}")
        if not all(np.isfinite(self.params)):
            raise ValueError("parameters must be finite")
        if self.kind in ("Prolate", "Oblate") and not self.params[0] > 1.0:
            raise ValueError(f"{self.kind} requires a > 1, got {self.params[0]}")
        if expected > 1 and np.any(np.diff(self.params) <= 0):
            raise ValueError(f"{self.kind} parameters must be strictly increasing, got {self.params}")
        return self

    @property
    def nvars(self) -> int:
        """Number of Cartesian variables (4 on S^3, 3 on S^2)."""
        return 3 if self.kind.startswith("S2") else 4

    @property
    def on_s2(self) -> bool:
        return self.nvars == 3

    def label(self) -> str:
        if not self.params:
            return self.kind
        return f"{self.kind}({', '.join(f'{p:g}' for p in self.params)})"

    class Config:
        json_schema_extra = {
            "example": {
                "kind": "Ellipsoidal",
                "params": [1.0, 2.0, 5.0, 8.0],
            }
        }
