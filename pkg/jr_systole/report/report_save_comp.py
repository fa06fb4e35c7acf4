# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import csv
import io
import json
import yaml
import logging

from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.common.systole_enums import ReportFormat
from jr_systole.exceptions.exceptions_report import ReportConverterError

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

class ReportConverters:
    """
    ReportConverters
    ================
    Registry of converters from a report payload to bytes, keyed by format.
    JSON and YAML converters take a mapping; the CSV converter takes a
    header and rows.

    Methods:
    -----------------
        ### add_converter(name: str, converter: Callable) :
            Registers an extra converter.
        ### get_converter(name: str) -> Optional[Callable] :
            Looks a converter up.
        ### remove_converter(name: str) :
            Removes a non-default converter.
        ### get_keys() -> list :
            Registered names.

    Default Converters:
    -----------------
        - ReportFormat.JSON : sorted keys, indent 2, trailing newline.
        - ReportFormat.CSV : "\\n" line terminator.
        - ReportFormat.YAML : safe_dump with sorted keys.
    """

    # ------------
    # Slots

    __slots__ = (
        "_converters",
    )

    # ------------
    # Attributes

    _converters: Dict[str, Callable]

    # ------------
    # Constructor

    def __init__(self) -> None:
        self._converters = self._default_map_converters()

    # ------------
    # Magic Methods

    def __str__(self) -> str:
        return f"ReportConverters({list(self._converters)})"

    def __len__(self) -> int:
        return len(self._converters)

    def __getitem__(self, name: str) -> Optional[Callable]:
        if not isinstance(name, str):
            raise TypeError("Name must be a string.")
        return self._converters.get(name)

    def __contains__(self, name: str) -> bool:
        return name in self._converters

    # ------------
    # Properties

    @property
    def converters(self) -> Dict[str, Callable]:
        return self._converters

    # ------------
    # Methods

    def add_converter(self, name: str, converter: Callable) -> None:
        if not isinstance(name, str):
            raise TypeError("Name must be a string.")
        if not callable(converter):
            raise TypeError("Converter must be callable.")
        self._converters[name] = converter

    def get_converter(self, name: str) -> Optional[Callable]:
        if not isinstance(name, str):
            raise TypeError("Name must be a string.")
        return self._converters.get(name)

    def remove_converter(self, name: str) -> None:
        if name in (ReportFormat.JSON, ReportFormat.CSV, ReportFormat.YAML):
            raise ValueError("Cannot remove default converters.")
        self._converters.pop(name, None)

    def get_keys(self) -> List[str]:
        return list(self._converters.keys())

    # ------------
    # Converters

    def _make_json(self, payload: Dict[str, Any]) -> bytes:
        """
        _make_json
        ==========
        Deterministic JSON: sorted keys, two-space indent, trailing newline.
        """
        try:
            text = json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
            return (text + "\n").encode("utf-8")
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> making json: {e}")
            raise ReportConverterError(f"Error '{e.__class__.__name__}' -> making json: {e}") from e

    def _make_csv(self, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> bytes:
        """
        _make_csv
        =========
        Header line plus one line per row, "\\n" terminated.
        """
        try:
            buffer = io.StringIO()
            writer = csv.writer(buffer, lineterminator="\n")
            writer.writerow(list(header))
            for row in rows:
                if len(row) != len(header):
                    raise ValueError(f"Row {row} has {len(row)} fields, header has {len(header)}")
                writer.writerow(list(row))
            return buffer.getvalue().encode("utf-8")
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> making csv: {e}")
            raise ReportConverterError(f"Error '{e.__class__.__name__}' -> making csv: {e}") from e

    def _make_yaml(self, payload: Dict[str, Any]) -> bytes:
        try:
            text = yaml.safe_dump(payload, sort_keys=True, allow_unicode=True)
            if not text:
                raise ValueError("YAML data must not be empty.")
            return text.encode("utf-8")
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> making yaml: {e}")
            raise ReportConverterError(f"Error '{e.__class__.__name__}' -> making yaml: {e}") from e

    def _default_map_converters(self) -> Dict[str, Callable]:
        return {
            ReportFormat.JSON: self._make_json,
            ReportFormat.CSV: self._make_csv,
            ReportFormat.YAML: self._make_yaml,
        }
