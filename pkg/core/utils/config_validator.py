from typing import Any, Dict, Sequence, Tuple

from pydantic import BaseModel

from core.utils.exceptions import ValidationError
from logger import Logger


class ConfigValidator:
    """Utility class for validating and extracting system configurations."""

    @staticmethod
    def _as_dict(config: Any) -> Dict[str, Any]:
        if isinstance(config, BaseModel):
            return config.model_dump(exclude_none=True)
        if isinstance(config, dict):
            return config.copy()
        return dict(config)

    @staticmethod
    def extract_system_config(
        config: Any,
        config_name: str,
        supported_kinds: Sequence[str],
    ) -> Tuple[str, Tuple[float, ...]]:
        """
        Extract the system kind and its shape parameters from a config.

        Two layouts are accepted: the canonical {"kind": ..., "params": [...]}
        and the keyed form {"Prolate": {"params": [2.4]}} (or {"Prolate": [2.4]}),
        which must carry exactly one system key.

        Args:
            config: Configuration object (BaseModel or dict)
            config_name: Name of the config being validated (for error messages)
            supported_kinds: Accepted system kinds

        Returns:
            Tuple of (kind, params)

        Raises:
            ValidationError: If no or several system keys are present, or the kind is unknown
        """
        config_dict = ConfigValidator._as_dict(config)

        if "kind" in config_dict:
            kind = config_dict["kind"]
            if kind not in supported_kinds:
                raise ValidationError(f"{config_name} kind must be one of {list(supported_kinds)}, got {kind!r}")
            params = tuple(float(p) for p in config_dict.get("params", ()) or ())
            Logger.debug(f"Extracted {config_name} system: {kind}", "[ConfigValidator]")
            return kind, params

        kind = None
        system_config: Any = None
        for candidate in supported_kinds:
            if candidate in config_dict:
                if kind is not None:
                    Logger.debug(
                        f"{config_name} config has multiple system keys: {kind} and {candidate}",
                        "[ConfigValidator]",
                    )
                    raise ValidationError(
                        f"{config_name} config must have exactly one system key from {list(supported_kinds)}"
                    )
                kind = candidate
                system_config = config_dict[candidate]

        if kind is None:
            Logger.debug(
                f"{config_name} config missing system key. Expected one of: {list(supported_kinds)}",
                "[ConfigValidator]",
            )
            raise ValidationError(f"{config_name} config must have one of these keys: {list(supported_kinds)}")

        if isinstance(system_config, dict):
            system_config = system_config.get("params", ())
        params = tuple(float(p) for p in (system_config or ()))
        Logger.debug(f"Extracted {config_name} system: {kind}", "[ConfigValidator]")
        return kind, params
