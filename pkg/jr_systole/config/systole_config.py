# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import math
import yaml
import logging

from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Union

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.field.quad_field import FieldDescriptor, field_from_int
from jr_systole.kleinian.geodesics import SquareSystoleParams
from jr_systole.clifford.clifford_algebra import MAX_DIMENSION
from jr_systole.exceptions.exceptions_config import (
    SystoleConfigValueError,
    SystoleConfigLoadError,
)

# -------------------------------------------------------------------------------------------------
# Logging
# -------------------------------------------------------------------------------------------------

try:
    LOGGER: logging.Logger = setup_logger()
except Exception as e:
    LOGGER: logging.Logger = logging.getLogger(__name__)
    LOGGER.setLevel(logging.INFO)
    handler = logging.StreamHandler()
    formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    handler.setFormatter(formatter)
    LOGGER.addHandler(handler)
    LOGGER.error(f"Error setting up logger: {e}")

# -------------------------------------------------------------------------------------------------
# Constants
# -------------------------------------------------------------------------------------------------

SETTINGS_FILE_PATH: Path = Path(__file__).resolve().parent / "systole_settings.yaml"

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

# -------------------------------------------------------------------------------------------------
# CLasses
# -------------------------------------------------------------------------------------------------

class SystoleConfig:
    """
    SystoleConfig
    =============
    Validated run configuration shared by every subcommand.

    Attributes:
        field_d (int) :
            Radicand of the working field. 0 and 1 select Q.
        dimension (int) :
            Clifford dimension n, between 1 and MAX_DIMENSION.
        height (int) :
            Enumeration height.
        max_norm (Fraction) :
            Census bound N on |t|^2.
        hol_lo, hol_hi (float) :
            Census holonomy interval inside [0, 2 pi].
        primitive_only (bool) :
            Drop census records flagged as powers.
        tolerance (float) :
            Tolerance recorded next to floating point invariants.
        n0, l0 (Optional[float]) :
            Square-systole gate overrides; None derives them.
        output_dir (Path) :
            Directory for emitted reports.
        workers (int) :
            Process count for enumeration-backed subcommands.
        seed (int) :
            Seed of the randomized checks.
        log_level (str) :
            Level name for the package logger.

    Methods:
    -----------------
        ### config_from_dict(data) / config_from_yaml(data) / config_from_file(path) :
            Update the instance; unknown keys are logged and ignored.
        ### static_config_from_dict(data) -> SystoleConfig :
            Defaults updated from ``data``.
        ### field() -> FieldDescriptor :
            The working field.
        ### square_systole_params() -> SquareSystoleParams :
            Gates with the configured overrides.
    """

    # ------------
    # Slots

    __slots__ = (
        "_field_d",
        "_dimension",
        "_height",
        "_max_norm",
        "_hol_lo",
        "_hol_hi",
        "_primitive_only",
        "_tolerance",
        "_n0",
        "_l0",
        "_output_dir",
        "_workers",
        "_seed",
        "_log_level",
    )

    # ------------
    # Constructor

    def __init__(
        self,
        field_d: int = -1,
        dimension: int = 2,
        height: int = 2,
        max_norm: Union[int, str, Fraction] = 25,
        hol_lo: float = 0.0,
        hol_hi: float = 2 * math.pi,
        primitive_only: bool = False,
        tolerance: float = 1e-12,
        n0: Optional[float] = None,
        l0: Optional[float] = None,
        output_dir: Union[str, Path] = ".",
        workers: int = 1,
        seed: int = 0,
        log_level: str = "INFO",
    ) -> None:
        self._hol_lo = 0.0
        self._hol_hi = 2 * math.pi
        self.field_d = field_d
        self.dimension = dimension
        self.height = height
        self.max_norm = max_norm
        self.hol_hi = hol_hi
        self.hol_lo = hol_lo
        self.primitive_only = primitive_only
        self.tolerance = tolerance
        self.n0 = n0
        self.l0 = l0
        self.output_dir = output_dir
        self.workers = workers
        self.seed = seed
        self.log_level = log_level

    # ------------
    # Magic Methods

    def __repr__(self) -> str:
        return f"SystoleConfig({self.as_dict()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SystoleConfig):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    # ------------
    # Properties

    @property
    def field_d(self) -> int:
        return self._field_d

    @field_d.setter
    def field_d(self, value: int) -> None:
        try:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError("field_d must be an integer.")
            field_from_int(value)
            self._field_d = value
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> setting field_d: {e}")
            raise SystoleConfigValueError(f"Error '{e.__class__.__name__}' -> setting field_d: {e}") from e

    @property
    def dimension(self) -> int:
        return self._dimension

    @dimension.setter
    def dimension(self, value: int) -> None:
        try:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError("Dimension must be an integer.")
            if not 1 <= value <= MAX_DIMENSION:
                raise ValueError(f"Dimension must lie in [1, {MAX_DIMENSION}], got {value}")
            self._dimension = value
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> setting dimension: {e}")
            raise SystoleConfigValueError(f"Error '{e.__class__.__name__}' -> setting dimension: {e}") from e

    @property
    def height(self) -> int:
        return self._height

    @height.setter
    def height(self, value: int) -> None:
        try:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError("Height must be an integer.")
            if value < 1:
                raise ValueError(f"Height must be positive, got {value}")
            self._height = value
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> setting height: {e}")
            raise SystoleConfigValueError(f"Error '{e.__class__.__name__}' -> setting height: {e}") from e

    @property
    def max_norm(self) -> Fraction:
        return self._max_norm

    @max_norm.setter
    def max_norm(self, value: Union[int, str, Fraction]) -> None:
        try:
            if isinstance(value, (bool, float)):
                raise TypeError("max_norm must be an integer, a fraction or a rational string.")
            norm = Fraction(value)
            if norm < 0:
                raise ValueError(f"max_norm must be nonnegative, got {norm}")
            self._max_norm = norm
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> setting max_norm: {e}")
            raise SystoleConfigValueError(f"Error '{e.__class__.__name__}' -> setting max_norm: {e}") from e

    @property
    def hol_lo(self) -> float:
        return self._hol_lo

    @hol_lo.setter
    def hol_lo(self, value: float) -> None:
        try:
            value = float(value)
            if not 0.0 <= value <= self._hol_hi:
                raise ValueError(f"hol_lo must lie in [0, hol_hi = {self._hol_hi}], got {value}")
            self._hol_lo = value
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> setting hol_lo: {e}")
            raise SystoleConfigValueError(f"Error '{e.__class__.__name__}' -> setting hol_lo: {e}") from e

    @property
    def hol_hi(self) -> float:
        return self._hol_hi

    @hol_hi.setter
    def hol_hi(self, value: float) -> None:
        try:
            value = float(value)
            if not self._hol_lo <= value <= 2 * math.pi:
                raise ValueError(f"hol_hi must lie in [hol_lo = {self._hol_lo}, 2 pi], got {value}")
            self._hol_hi = value
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> setting hol_hi: {e}")
            raise SystoleConfigValueError(f"Error '{e.__class__.__name__}' -> setting hol_hi: {e}") from e

    @property
    def primitive_only(self) -> bool:
        return self._primitive_only

    @primitive_only.setter
    def primitive_only(self, value: bool) -> None:
        if not isinstance(value, bool):
            LOGGER.error("Error 'TypeError' -> setting primitive_only: must be a boolean")
            raise SystoleConfigValueError("primitive_only must be a boolean.")
        self._primitive_only = value

    @property
    def tolerance(self) -> float:
        return self._tolerance

    @tolerance.setter
    def tolerance(self, value: float) -> None:
        try:
            value = float(value)
            if not 0.0 < value < 1.0:
                raise ValueError(f"Tolerance must lie in (0, 1), got {value}")
            self._tolerance = value
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> setting tolerance: {e}")
            raise SystoleConfigValueError(f"Error '{e.__class__.__name__}' -> setting tolerance: {e}") from e

    @property
    def n0(self) -> Optional[float]:
        return self._n0

    @n0.setter
    def n0(self, value: Optional[float]) -> None:
        try:
            if value is not None:
                value = float(value)
                if value <= 1.0:
                    raise ValueError(f"N0 must exceed 1, got {value}")
            self._n0 = value
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> setting n0: {e}")
            raise SystoleConfigValueError(f"Error '{e.__class__.__name__}' -> setting n0: {e}") from e

    @property
    def l0(self) -> Optional[float]:
        return self._l0

    @l0.setter
    def l0(self, value: Optional[float]) -> None:
        try:
            if value is not None:
                value = float(value)
                if value <= 0.0:
                    raise ValueError(f"L0 must be positive, got {value}")
            self._l0 = value
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> setting l0: {e}")
            raise SystoleConfigValueError(f"Error '{e.__class__.__name__}' -> setting l0: {e}") from e

    @property
    def output_dir(self) -> Path:
        return self._output_dir

    @output_dir.setter
    def output_dir(self, value: Union[str, Path]) -> None:
        if not isinstance(value, (str, Path)):
            LOGGER.error("Error 'TypeError' -> setting output_dir: must be a string or Path")
            raise SystoleConfigValueError("output_dir must be a string or Path object.")
        self._output_dir = Path(value)

    @property
    def workers(self) -> int:
        return self._workers

    @workers.setter
    def workers(self, value: int) -> None:
        try:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError("Workers must be an integer.")
            if value < 1:
                raise ValueError(f"Workers must be positive, got {value}")
            self._workers = value
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> setting workers: {e}")
            raise SystoleConfigValueError(f"Error '{e.__class__.__name__}' -> setting workers: {e}") from e

    @property
    def seed(self) -> int:
        return self._seed

    @seed.setter
    def seed(self, value: int) -> None:
        if isinstance(value, bool) or not isinstance(value, int):
            LOGGER.error("Error 'TypeError' -> setting seed: must be an integer")
            raise SystoleConfigValueError("Seed must be an integer.")
        self._seed = value

    @property
    def log_level(self) -> str:
        return self._log_level

    @log_level.setter
    def log_level(self, value: str) -> None:
        if not isinstance(value, str) or value.upper() not in LOG_LEVELS:
            LOGGER.error(f"Error 'ValueError' -> setting log_level: {value!r}")
            raise SystoleConfigValueError(f"log_level must be one of {', '.join(LOG_LEVELS)}, got {value!r}")
        self._log_level = value.upper()

    # ------------
    # Methods

    def field(self) -> FieldDescriptor:
        return field_from_int(self._field_d)

    def square_systole_params(self) -> SquareSystoleParams:
        if self._n0 is None:
            return SquareSystoleParams(l0=self._l0)
        return SquareSystoleParams(n0=self._n0, l0=self._l0)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "field_d": self._field_d,
            "dimension": self._dimension,
            "height": self._height,
            "max_norm": str(self._max_norm),
            "hol_lo": self._hol_lo,
            "hol_hi": self._hol_hi,
            "primitive_only": self._primitive_only,
            "tolerance": self._tolerance,
            "n0": self._n0,
            "l0": self._l0,
            "output_dir": str(self._output_dir),
            "workers": self._workers,
            "seed": self._seed,
            "log_level": self._log_level,
        }

    # ------------
    # Loaders

    def config_from_dict(self, data: Dict[str, Any]) -> None:
        """
        config_from_dict
        ================
        Sets every known key of ``data``. The holonomy bounds are applied so
        that a new interval disjoint from the current one is accepted.

        Raises:
            SystoleConfigLoadError : ``data`` is not a mapping.
            SystoleConfigValueError : a value is out of range.
        """
        if not isinstance(data, dict):
            LOGGER.error(f"Error 'TypeError' -> configuring from dict: got {type(data).__name__}")
            raise SystoleConfigLoadError(f"Configuration must be a mapping, got {type(data).__name__}")
        data = dict(data)
        if "hol_lo" in data and "hol_hi" in data:
            self._hol_lo, self._hol_hi = 0.0, 2 * math.pi
            self.hol_hi = data.pop("hol_hi")
            self.hol_lo = data.pop("hol_lo")
        for key, value in data.items():
            if f"_{key}" in SystoleConfig.__slots__:
                setattr(self, key, value)
            else:
                LOGGER.warning(f"Key {key} is not a configuration key; ignored.")

    def config_from_yaml(self, data: bytes) -> None:
        """Updates the configuration from YAML bytes. An empty document changes nothing."""
        try:
            if not isinstance(data, bytes):
                raise TypeError("Data must be a bytes object.")
            loaded = yaml.safe_load(data)
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> configuring from YAML: {e}")
            raise SystoleConfigLoadError(f"Error '{e.__class__.__name__}' -> configuring from YAML: {e}") from e
        if loaded is None:
            return
        self.config_from_dict(loaded)

    def config_from_file(self, path: Union[str, Path]) -> None:
        """Updates the configuration from a YAML file."""
        try:
            path = Path(path)
            if not path.is_file():
                raise FileNotFoundError(f"Configuration file {path} does not exist")
            data = path.read_bytes()
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> reading configuration file: {e}")
            raise SystoleConfigLoadError(f"Error '{e.__class__.__name__}' -> reading configuration file: {e}") from e
        self.config_from_yaml(data)

    # Static

    @staticmethod
    def default() -> "SystoleConfig":
        """The packaged defaults from ``systole_settings.yaml``."""
        config = SystoleConfig()
        config.config_from_file(SETTINGS_FILE_PATH)
        return config

    @staticmethod
    def static_config_from_dict(data: Dict[str, Any]) -> "SystoleConfig":
        """Packaged defaults updated from ``data``."""
        config = SystoleConfig.default()
        config.config_from_dict(data)
        return config
