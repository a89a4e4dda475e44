from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from core.models import AffineMap, SystemSpec


class MonodromyConfig(BaseModel):
    """Loop and lattice choices for a monodromy run."""

    center: Tuple[float, float] = Field(
        (0.0, 1.0),
        description="Center of the circular loop in scaled units (the prolate focus-focus value by default)"
    )
    radius: float = Field(
        0.35,
        gt=0.0,
        description="Loop radius in scaled units"
    )
    waypoints: int = Field(
        64,
        ge=3,
        le=4096,
        description="Number of waypoints on the loop before any refinement"
    )
    combined: bool = Field(
        True,
        description="Transport on the union of the two classes sharing the parity of m"
    )
    single_class: Optional[Tuple[int, int]] = Field(
        None,
        description="Class kept when combined is false (defaults to the first combined class)"
    )
    direction_hint: Tuple[float, float] = Field(
        (0.0, 1.0),
        description="Direction of the first basis vector of the initial cell"
    )

    @model_validator(mode='after')
    def validate_hint(self):
        """The hint must be a nonzero direction."""
        if self.direction_hint[0] == 0.0 and self.direction_hint[1] == 0.0:
            raise ValueError("direction_hint must be nonzero")
        return self


class OracleConfig(BaseModel):
    """Degrees used by the operator-matrix cross check."""

    calibration_degree: int = Field(
        2,
        ge=1,
        le=8,
        description="Highest degree pooled into the affine calibration"
    )
    degrees: List[int] = Field(
        default_factory=lambda: list(range(3, 9)),
        description="Degrees at which the calibrated spectra are compared"
    )

    @field_validator("degrees")
    @classmethod
    def validate_degrees(cls, v):
        if any(d < 0 or d > 8 for d in v):
            raise ValueError(f"oracle degrees must lie in 0..8, got {v}")
        return v


class SpectraConfig(BaseSettings):
    """
    Configuration for one run of the spectra toolkit.

    Inherits from BaseSettings to support environment variable loading.
    Environment variables are prefixed with SEPARABLE_; nested fields use "__".

    Example .env file:
        SEPARABLE_DEBUG=true
        SEPARABLE_DEGREE=20
        SEPARABLE_SYSTEM='{"Prolate": {"params": [2.4]}}'
        SEPARABLE_MONODROMY__RADIUS=0.3
    """
    model_config = SettingsConfigDict(
        env_prefix="SEPARABLE_",
        env_nested_delimiter="__",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore"
    )

    system: Union[SystemSpec, Dict[str, Any]] = Field(
        ...,
        description="System as SystemSpec, {'kind': ..., 'params': [...]} or keyed by the system name, e.g. {'Prolate': [2.4]}"
    )
    degree: int = Field(
        ...,
        ge=0,
        le=64,
        description="Total degree D (the degree l on S^2)"
    )
    classes: Optional[List[Tuple[int, ...]]] = Field(
        None,
        description="Symmetry classes to keep, e.g. [[0, 0], [1, 1]]; None keeps every class"
    )
    seed: int = Field(
        42,
        description="Seed of the stochastic root-system kernel and the oracle's generic t"
    )
    output: Literal["csv", "json", "svg"] = Field(
        "csv",
        description="Output format"
    )
    scaling: Literal["hbar-scaled", "raw"] = Field(
        "hbar-scaled",
        description="Report eigenvalues scaled by powers of hbar or raw"
    )
    etilde_mode: Literal["unit", "exact"] = Field(
        "unit",
        description="E~ = 1 (plotting convention) or E~ = 1 - hbar^2 in action integrals"
    )
    state: Optional[Dict[str, int]] = Field(
        None,
        description="Quantum numbers selecting one state, e.g. {'m': 0, 'd': 0, 'k': 0}"
    )
    monodromy: MonodromyConfig = Field(
        default_factory=MonodromyConfig,
        description="Loop settings for the monodromy command"
    )
    oracle: OracleConfig = Field(
        default_factory=OracleConfig,
        description="Degrees for the oracle cross check"
    )
    debug: bool = Field(
        False,
        description="Enable debug mode for verbose logging"
    )
    permutation: Optional[Tuple[int, ...]] = Field(
        None,
        description="Relabel Cartesian axes, axis i taken from axis permutation[i]; e.g. [1, 0, 2, 3] for the 12-spherical variant"
    )
    presentation: Optional[AffineMap] = Field(
        None,
        description="Affine map applied to plotted eigenvalue pairs, e.g. to move a chosen critical value to the origin"
    )

    @field_validator("permutation")
    @classmethod
    def validate_permutation(cls, v):
        if v is not None and sorted(v) != list(range(len(v))):
            raise ValueError(f"permutation must reorder 0..{len(v) - 1}, got {list(v)}")
        return v
