# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import math
import logging

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.field.quad_field import FieldDescriptor, FieldElement, format_element
from jr_systole.exceptions.exceptions_census import CensusQueryError, CensusReportError

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

RECORD_COLUMNS: Tuple[str, ...] = (
    "trace",
    "trace_norm",
    "length",
    "holonomy",
    "holonomy_reduced",
    "realization_count",
    "axis_class_count",
    "primitive",
)

GROWTH_COLUMNS: Tuple[str, ...] = (
    "N",
    "tau_hat",
    "sigma_hat",
    "mu_hat",
    "n_over_log_n",
    "mu_hat_log_n_over_n",
)

TWO_PI: float = 2 * math.pi

# -------------------------------------------------------------------------------------------------
# Types
# -------------------------------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class CensusQuery:
    """
    CensusQuery
    ===========
    A trace census request.

    Attributes:
        field (FieldDescriptor) :
            Q or an imaginary quadratic field.
        max_norm (Fraction) :
            N, the bound on |t|^2.
        hol_lo, hol_hi (float) :
            The holonomy interval, inside [0, 2 pi].
        height (int) :
            Enumeration height.
        primitive_only (bool) :
            Drop records flagged as powers.
        workers (int) :
            Processes for the enumeration; never changes the output.
    """
    field: FieldDescriptor
    max_norm: Fraction
    hol_lo: float = 0.0
    hol_hi: float = TWO_PI
    height: int = 2
    primitive_only: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        try:
            if not isinstance(self.field, FieldDescriptor):
                raise TypeError(f"field must be a FieldDescriptor, got {type(self.field).__name__}")
            if not (self.field.is_rational or self.field.is_imaginary):
                raise ValueError(f"{self.field} is a real quadratic field")
            object.__setattr__(self, "max_norm", Fraction(self.max_norm))
            if self.max_norm < 0:
                raise ValueError(f"N must be nonnegative, got {self.max_norm}")
            if not 0.0 <= self.hol_lo <= self.hol_hi <= TWO_PI:
                raise ValueError(f"Need 0 <= hol_lo <= hol_hi <= 2 pi, got [{self.hol_lo}, {self.hol_hi}]")
            if isinstance(self.height, bool) or not isinstance(self.height, int) or self.height < 1:
                raise ValueError(f"Height must be a positive integer, got {self.height}")
            if not isinstance(self.workers, int) or self.workers < 1:
                raise ValueError(f"Workers must be a positive integer, got {self.workers}")
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> building census query: {e}")
            raise CensusQueryError(f"Error '{e.__class__.__name__}' -> building census query: {e}") from e

    def as_dict(self) -> Dict[str, Any]:
        return {
            "field": str(self.field),
            "max_norm": str(self.max_norm),
            "hol_lo": self.hol_lo,
            "hol_hi": self.hol_hi,
            "height": self.height,
            "primitive_only": self.primitive_only,
        }


@dataclass(frozen=True, slots=True)
class CensusRecord:
    """One normalized trace of the census."""
    trace: FieldElement
    trace_norm: Fraction
    length: float
    holonomy: float
    holonomy_reduced: float
    realization_count: int
    axis_class_count: int
    primitive: bool

    def as_row(self) -> List[str]:
        return [
            format_element(self.trace),
            str(self.trace_norm),
            repr(self.length),
            repr(self.holonomy),
            repr(self.holonomy_reduced),
            str(self.realization_count),
            str(self.axis_class_count),
            "true" if self.primitive else "false",
        ]

    def as_dict(self) -> Dict[str, Any]:
        return dict(zip(RECORD_COLUMNS, self.as_row()))


class CensusReport:
    """
    CensusReport
    ============
    Records of a census with the surrogate counts:

        tau_hat   : number of distinct normalized traces
        sigma_hat : axis classes summed over primitive records
        mu_hat    : sigma_hat / tau_hat, None when tau_hat = 0

    Methods:
    -----------------
        ### print_report() :
            Prints the summary to stdout.
        ### get_summary() -> Dict[str, Any] :
            Summary used for the JSON side file.
        ### csv_header() / csv_rows() :
            Fixed column order for CSV emission.
    """

    __slots__ = (
        "_query",
        "_records",
    )

    _query: CensusQuery
    _records: Tuple[CensusRecord, ...]

    def __init__(self, query: CensusQuery, records: Tuple[CensusRecord, ...]) -> None:
        self._query = query
        self._records = tuple(records)

    # ------------
    # Properties

    @property
    def query(self) -> CensusQuery:
        return self._query

    @property
    def records(self) -> Tuple[CensusRecord, ...]:
        return self._records

    @property
    def tau_hat(self) -> int:
        return sum(1 for r in self._records if r.realization_count > 0)

    @property
    def sigma_hat(self) -> int:
        return sum(r.axis_class_count for r in self._records if r.primitive)

    @property
    def mu_hat(self) -> Optional[Fraction]:
        tau = self.tau_hat
        return Fraction(self.sigma_hat, tau) if tau else None

    # ------------
    # Magic Methods

    def __len__(self) -> int:
        return len(self._records)

    def __str__(self) -> str:
        return f"CensusReport(tau_hat={self.tau_hat}, sigma_hat={self.sigma_hat}, mu_hat={self.mu_hat})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CensusReport):
            return NotImplemented
        return self._query == other._query and self._records == other._records

    # ------------
    # Methods

    def csv_header(self) -> Tuple[str, ...]:
        return RECORD_COLUMNS

    def csv_rows(self) -> List[List[str]]:
        return [record.as_row() for record in self._records]

    def get_summary(self) -> Dict[str, Any]:
        mu = self.mu_hat
        return {
            "query": self._query.as_dict(),
            "tau_hat": self.tau_hat,
            "sigma_hat": self.sigma_hat,
            "mu_hat": None if mu is None else str(mu),
            "records": len(self._records),
            "sigma_is_surrogate": True,
        }

    def as_dict(self) -> Dict[str, Any]:
        out = self.get_summary()
        out["rows"] = [record.as_dict() for record in self._records]
        return out

    def print_report(self) -> None:
        """
        print_report
        ============
        Prints the census summary and one line per trace.
        """
        try:
            string: str = "Census Report:\n"
            string += f"Field: {self._query.field}\n"
            string += f"N: {self._query.max_norm}\n"
            string += f"Holonomy interval: [{self._query.hol_lo:.6f}, {self._query.hol_hi:.6f}]\n"
            string += f"Height: {self._query.height}\n"
            string += f"tau_hat: {self.tau_hat}\n"
            string += f"sigma_hat (axis-class surrogate): {self.sigma_hat}\n"
            string += f"mu_hat: {self.mu_hat}\n"
            string += "Traces:\n"
            for record in self._records:
                flag = "" if record.primitive else " (power)"
                string += (
                    f"\t{format_element(record.trace)}: length={record.length:.6f} "
                    f"holonomy={record.holonomy_reduced:.6f} "
                    f"count={record.realization_count} axes={record.axis_class_count}{flag}\n"
                )
            print(string)
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> printing census report: {e}")
            raise CensusReportError(f"Error '{e.__class__.__name__}' -> printing census report: {e}") from e


@dataclass(frozen=True, slots=True)
class GrowthRow:
    """One row of a growth table."""
    N: Fraction
    tau_hat: int
    sigma_hat: int
    mu_hat: Optional[Fraction]

    @property
    def n_over_log_n(self) -> Optional[float]:
        if self.N <= 1:
            return None
        return float(self.N) / math.log(self.N)

    @property
    def mu_hat_log_n_over_n(self) -> Optional[float]:
        ratio = self.n_over_log_n
        if ratio is None or self.mu_hat is None:
            return None
        return float(self.mu_hat) / ratio

    def as_row(self) -> List[str]:
        ratio, scaled = self.n_over_log_n, self.mu_hat_log_n_over_n
        return [
            str(self.N),
            str(self.tau_hat),
            str(self.sigma_hat),
            "" if self.mu_hat is None else str(self.mu_hat),
            "" if ratio is None else repr(ratio),
            "" if scaled is None else repr(scaled),
        ]


class GrowthTable:
    """Growth rows for an increasing list of N at a fixed height."""

    __slots__ = (
        "_field",
        "_height",
        "_rows",
    )

    def __init__(self, field: FieldDescriptor, height: int, rows: Tuple[GrowthRow, ...]) -> None:
        self._field = field
        self._height = height
        self._rows = tuple(rows)

    @property
    def rows(self) -> Tuple[GrowthRow, ...]:
        return self._rows

    def __len__(self) -> int:
        return len(self._rows)

    def csv_header(self) -> Tuple[str, ...]:
        return GROWTH_COLUMNS

    def csv_rows(self) -> List[List[str]]:
        return [row.as_row() for row in self._rows]

    def as_dict(self) -> Dict[str, Any]:
        return {
            "field": str(self._field),
            "height": self._height,
            "rows": [dict(zip(GROWTH_COLUMNS, row.as_row())) for row in self._rows],
        }
