# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import csv
import io
import json
import yaml
import logging

from typing import Any, Callable, Dict, List, Optional

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.common.systole_enums import ReportFormat
from jr_systole.exceptions.exceptions_report import ReportLoaderError

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
# CLasses
# -------------------------------------------------------------------------------------------------

class ReportLoaders:
    """
    ReportLoaders
    =============
    Registry of loaders that parse emitted report bytes back. JSON and YAML
    give the mapping that was emitted; CSV gives a list of row dicts keyed by
    the header.
    """

    __slots__ = (
        "_loaders",
    )

    _loaders: Dict[str, Callable]

    def __init__(self) -> None:
        self._loaders = self._default_map_loaders()

    def __len__(self) -> int:
        return len(self._loaders)

    def __getitem__(self, key: str) -> Optional[Callable]:
        if not isinstance(key, str):
            raise TypeError("Key must be a string.")
        return self._loaders.get(key)

    @property
    def loaders(self) -> Dict[str, Callable]:
        return self._loaders

    def add_loader(self, key: str, loader: Callable) -> None:
        if not isinstance(key, str):
            raise TypeError("Key must be a string.")
        if not callable(loader):
            raise TypeError("Loader must be callable.")
        self._loaders[key] = loader

    def get_loader(self, key: str) -> Optional[Callable]:
        return self[key]

    def load(self, data: bytes, fmt: ReportFormat) -> Any:
        """Parses ``data`` with the loader registered for ``fmt``."""
        loader = self.get_loader(ReportFormat(fmt))
        if loader is None:
            raise ReportLoaderError(f"No loader registered for {fmt}")
        return loader(data)

    # ------------
    # Loaders

    def _load_json(self, data: bytes) -> Dict[str, Any]:
        try:
            if not isinstance(data, bytes):
                raise TypeError("Data must be a bytes object.")
            loaded = json.loads(data.decode("utf-8"))
            if not isinstance(loaded, dict):
                raise TypeError(f"Report must be a JSON object, got {type(loaded).__name__}")
            return loaded
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> loading json: {e}")
            raise ReportLoaderError(f"Error '{e.__class__.__name__}' -> loading json: {e}") from e

    def _load_csv(self, data: bytes) -> List[Dict[str, str]]:
        try:
            if not isinstance(data, bytes):
                raise TypeError("Data must be a bytes object.")
            reader = csv.DictReader(io.StringIO(data.decode("utf-8")))
            return [dict(row) for row in reader]
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> loading csv: {e}")
            raise ReportLoaderError(f"Error '{e.__class__.__name__}' -> loading csv: {e}") from e

    def _load_yaml(self, data: bytes) -> Dict[str, Any]:
        try:
            if not isinstance(data, bytes):
                raise TypeError("Data must be a bytes object.")
            loaded = yaml.safe_load(data)
            if not isinstance(loaded, dict):
                raise TypeError(f"Report must be a YAML mapping, got {type(loaded).__name__}")
            return loaded
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> loading yaml: {e}")
            raise ReportLoaderError(f"Error '{e.__class__.__name__}' -> loading yaml: {e}") from e

    def _default_map_loaders(self) -> Dict[str, Callable]:
        return {
            ReportFormat.JSON: self._load_json,
            ReportFormat.CSV: self._load_csv,
            ReportFormat.YAML: self._load_yaml,
        }
