from core.api.config import SpectraConfig, MonodromyConfig, OracleConfig
from core.api.spectra_api import SpectraAPI

__all__ = ["SpectraAPI", "SpectraConfig", "MonodromyConfig", "OracleConfig"]
