# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import os
import json
import logging
import tempfile

from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Union

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.common.systole_enums import ReportFormat
from jr_systole.report.report_save_comp import ReportConverters
from jr_systole.report.report_load_comp import ReportLoaders
from jr_systole.exceptions.exceptions_report import ReportConverterError, ReportEmitError

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

CONVERTERS: ReportConverters = ReportConverters()
LOADERS: ReportLoaders = ReportLoaders()

# -------------------------------------------------------------------------------------------------
# Functions
# -------------------------------------------------------------------------------------------------

def report_payload(report: Any) -> Dict[str, Any]:
    """The mapping emitted for JSON and YAML: ``as_dict()`` or the mapping itself."""
    if isinstance(report, dict):
        return report
    as_dict = getattr(report, "as_dict", None)
    if as_dict is None:
        raise ReportConverterError(f"{type(report).__name__} has no as_dict()")
    return as_dict()


def _atomic_write(path: Path, data: bytes) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp_name, path)
    except Exception:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise


def emit_report(
    report: Any,
    fmt: Union[ReportFormat, str] = ReportFormat.JSON,
    path: Optional[Union[str, Path]] = None,
) -> bytes:
    """
    emit_report
    ===========
    Serializes a report and, with ``path``, writes it atomically.

    Arguments:
        report (Any) :
            Anything with ``as_dict()`` (JSON, YAML) and, for CSV,
            ``csv_header()`` plus ``csv_rows()``. Plain dicts are accepted for
            JSON and YAML.
        fmt (ReportFormat) :
            Output format.
        path (Optional[str | Path]) :
            Destination file.

    Returns:
        out (bytes) :
            The serialized report; identical inputs give identical bytes.

    Raises:
        ReportConverterError : the report does not support the format.
        ReportEmitError : the file could not be written.
    """
    try:
        fmt = ReportFormat(fmt)
    except ValueError as e:
        raise ReportConverterError(f"Unknown report format '{fmt}'") from e

    converter = CONVERTERS.get_converter(fmt)
    if converter is None:
        raise ReportConverterError(f"No converter registered for {fmt}")
    if fmt is ReportFormat.CSV:
        if not hasattr(report, "csv_header") or not hasattr(report, "csv_rows"):
            raise ReportConverterError(f"{type(report).__name__} cannot be emitted as CSV")
        data = converter(report.csv_header(), report.csv_rows())
    else:
        data = converter(report_payload(report))

    if path is not None:
        try:
            _atomic_write(Path(path), data)
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> writing report to {path}: {e}")
            raise ReportEmitError(f"Error '{e.__class__.__name__}' -> writing report to {path}: {e}") from e
        LOGGER.info(f"Wrote {fmt.name} report to {path}")
    return data


def load_report(data: bytes, fmt: Union[ReportFormat, str] = ReportFormat.JSON) -> Any:
    """Parses bytes produced by ``emit_report``."""
    return LOADERS.load(data, ReportFormat(fmt))


def emit_json_lines(records: Iterable[Dict[str, Any]], path: Optional[Union[str, Path]] = None) -> bytes:
    """One sorted-key JSON object per line; written atomically when ``path`` is given."""
    try:
        data = "".join(json.dumps(record, sort_keys=True) + "\n" for record in records).encode("utf-8")
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> making json lines: {e}")
        raise ReportConverterError(f"Error '{e.__class__.__name__}' -> making json lines: {e}") from e
    if path is not None:
        try:
            _atomic_write(Path(path), data)
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> writing json lines to {path}: {e}")
            raise ReportEmitError(f"Error '{e.__class__.__name__}' -> writing json lines to {path}: {e}") from e
    return data
