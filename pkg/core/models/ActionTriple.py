from typing import Tuple

from pydantic import BaseModel, Field, model_validator

NEGATIVE_TOL = 1e-9


class ActionTriple(BaseModel):
    """Classical actions (J1, J2, J3); their sum equals sqrt(E~)."""

    J1: float = Field(..., description="First continuous action")
    J2: float = Field(..., description="Second continuous action")
    J3: float = Field(..., description="Third continuous action")

    @model_validator(mode="after")
    def validate_nonnegative(self):
        """Actions may dip below zero only by rounding."""
        for name in ("J1", "J2", "J3"):
            if getattr(self, name) < -NEGATIVE_TOL:
                raise ValueError(f"{name} must be nonnegative, got {getattr(self, name)}")
        return self

    @property
    def total(self) -> float:
        return self.J1 + self.J2 + self.J3

    def as_tuple(self) -> Tuple[float, float, float]:
        return (self.J1, self.J2, self.J3)
