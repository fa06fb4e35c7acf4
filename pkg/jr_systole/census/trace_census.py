# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import math
import logging

from fractions import Fraction
from typing import Dict, List, Sequence, Set, Tuple, Union

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.common.systole_enums import ElementType
from jr_systole.census.census_report import (
    CensusQuery,
    CensusRecord,
    CensusReport,
    GrowthRow,
    GrowthTable,
    TWO_PI,
)
from jr_systole.field.quad_field import (
    FieldDescriptor,
    FieldElement,
    IntegerRingElement,
    disc_coordinates,
)
from jr_systole.kleinian.geodesics import length_holonomy
from jr_systole.kleinian.moebius import NormalizedTrace, chebyshev_trace, classify
from jr_systole.kleinian.sl2_enumerator import Coord, Quad, enumerate_sl2_quads
from jr_systole.exceptions.exceptions_invariants import InvariantViolation
from jr_systole.exceptions.exceptions_census import (
    CensusLatticeError,
    CensusPrimitiveError,
    CensusRunError,
    CensusGrowthError,
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
# Types
# -------------------------------------------------------------------------------------------------

AxisKey = Tuple[Tuple[Fraction, Fraction], ...]

# -------------------------------------------------------------------------------------------------
# Lattice points
# -------------------------------------------------------------------------------------------------

def lattice_count(field: FieldDescriptor, radius: Union[int, float, Fraction]) -> int:
    """
    lattice_count
    =============
    Exact number of ring integers with complex modulus at most ``radius``.

    Raises:
        CensusLatticeError : real quadratic field or negative radius.
    """
    try:
        if not (field.is_rational or field.is_imaginary):
            raise ValueError(f"{field} is a real quadratic field")
        radius = Fraction(radius)
        if radius < 0:
            raise ValueError(f"Radius must be nonnegative, got {radius}")
        return len(disc_coordinates(field, radius * radius))
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> counting lattice points: {e}")
        raise CensusLatticeError(f"Error '{e.__class__.__name__}' -> counting lattice points: {e}") from e

# -------------------------------------------------------------------------------------------------
# Primitivity
# -------------------------------------------------------------------------------------------------

def primitive_trace_filter(t: Union[NormalizedTrace, FieldElement], max_k: int = 2) -> bool:
    """
    primitive_trace_filter
    ======================
    False when some loxodromic ring integer t' and k in [2, max_k] satisfy
    p_k(t') = +-t, so that t is the trace of a k-th power. Candidates t' are
    the integers of the trace field with |t'| <= (|t| + 2)^(1/k) + 2.

    Raises:
        CensusPrimitiveError : t is not loxodromic, or max_k < 2.
    """
    trace = NormalizedTrace.of(t)
    if classify(trace) is not ElementType.LOXODROMIC:
        LOGGER.error(f"Error 'CensusPrimitiveError' -> primitive_trace_filter({trace})")
        raise CensusPrimitiveError(f"Trace {trace} is not loxodromic")
    if isinstance(max_k, bool) or not isinstance(max_k, int) or max_k < 2:
        raise CensusPrimitiveError(f"max_k must be an integer >= 2, got {max_k}")

    value = trace.value
    field = value.field
    modulus = abs(value.to_complex())
    for k in range(2, max_k + 1):
        radius = (modulus + 2) ** (1.0 / k) + 2
        for x2, y2 in disc_coordinates(field, Fraction(radius * radius)):
            candidate = IntegerRingElement.from_doubled(x2, y2, field)
            if classify(candidate) is not ElementType.LOXODROMIC:
                continue
            power = chebyshev_trace(candidate, k)
            if power == value or power == -value:
                LOGGER.debug(f"Trace {trace} = +-p_{k}({candidate})")
                return False
    return True

# -------------------------------------------------------------------------------------------------
# Census
# -------------------------------------------------------------------------------------------------

def _axis_key(field: FieldDescriptor, quad: Quad) -> AxisKey:
    """The triple (c, d - a, -b) scaled so that its first nonzero entry is 1."""
    a, b, c, d = quad
    triple = [
        FieldElement.from_doubled(c[0], c[1], field),
        FieldElement.from_doubled(d[0] - a[0], d[1] - a[1], field),
        FieldElement.from_doubled(-b[0], -b[1], field),
    ]
    pivot = next(x for x in triple if x)
    return tuple(((x / pivot).a, (x / pivot).b) for x in triple)


def _collect(field: FieldDescriptor, quads: Sequence[Quad], max_norm: Fraction) -> Dict[Coord, Tuple[int, Set[AxisKey]]]:
    """Groups loxodromic matrices with |tr|^2 <= N by trace, one per sign pair."""
    d = 0 if field.degree == 1 else field.d
    bound4 = 4 * max_norm
    groups: Dict[Coord, List] = {}
    for quad in quads:
        a, _, _, dd = quad
        x, y = a[0] + dd[0], a[1] + dd[1]
        if y < 0 or (y == 0 and x < 0):
            continue
        if y == 0 and x <= 4:
            continue
        if x * x - d * y * y > bound4:
            continue
        entry = groups.get((x, y))
        if entry is None:
            entry = groups[(x, y)] = [0, set()]
        entry[0] += 1
        entry[1].add(_axis_key(field, quad))
    return {key: (value[0], value[1]) for key, value in groups.items()}


def _build_report(query: CensusQuery, quads: Sequence[Quad]) -> CensusReport:
    field = query.field
    d = 0 if field.degree == 1 else field.d
    kept = []
    for (x, y), (count, axes) in _collect(field, quads, query.max_norm).items():
        trace = IntegerRingElement.from_doubled(x, y, field)
        invariant = length_holonomy(trace)
        if not query.hol_lo <= invariant.holonomy_reduced <= query.hol_hi:
            continue
        kept.append((Fraction(x * x - d * y * y, 4), x, y, trace, invariant, count, len(axes)))

    records: List[CensusRecord] = []
    if kept:
        min_length = min(item[4].length for item in kept)
        for norm, x, y, trace, invariant, count, axes in sorted(kept, key=lambda item: item[:3]):
            max_k = max(2, math.ceil(invariant.length / min_length))
            primitive = primitive_trace_filter(trace, max_k)
            if query.primitive_only and not primitive:
                continue
            records.append(
                CensusRecord(
                    trace=trace,
                    trace_norm=norm,
                    length=invariant.length,
                    holonomy=invariant.holonomy,
                    holonomy_reduced=invariant.holonomy_reduced,
                    realization_count=count,
                    axis_class_count=axes,
                    primitive=primitive,
                )
            )
    return CensusReport(query, tuple(records))


def trace_census(query: CensusQuery) -> CensusReport:
    """
    trace_census
    ============
    Enumerates SL(2) at the query height, keeps loxodromic elements with
    |tr|^2 <= N whose reduced holonomy lies in the interval, groups them by
    normalized trace and counts realizations and axis classes (fixed-point
    pairs) per trace. Output order is (|t|^2, Re, Im) for any worker count.

    Raises:
        CensusRunError : the enumeration or aggregation failed.
        InvariantViolation : an integrality check inside the enumeration failed.
    """
    try:
        quads = enumerate_sl2_quads(query.field, query.height, workers=query.workers)
        report = _build_report(query, quads)
    except InvariantViolation:
        raise
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> running trace census: {e}")
        raise CensusRunError(f"Error '{e.__class__.__name__}' -> running trace census: {e}") from e
    LOGGER.info(f"Census over {query.field} (N={query.max_norm}, H={query.height}): {report}")
    return report


def growth_table(
    field: FieldDescriptor,
    n_list: Sequence[Union[int, Fraction]],
    interval: Tuple[float, float] = (0.0, TWO_PI),
    height: int = 4,
    primitive_only: bool = False,
    workers: int = 1,
) -> GrowthTable:
    """
    growth_table
    ============
    One census row per N of a strictly increasing list, sharing a single
    enumeration at ``height``.

    Raises:
        CensusGrowthError : empty or non-increasing list.
        InvariantViolation : an integrality check inside the enumeration failed.
    """
    values = [Fraction(n) for n in n_list]
    if not values or any(b <= a for a, b in zip(values, values[1:])):
        LOGGER.error(f"Error 'CensusGrowthError' -> N list {list(n_list)} is not increasing")
        raise CensusGrowthError(f"N list must be nonempty and strictly increasing, got {list(n_list)}")

    queries = [
        CensusQuery(field, n, interval[0], interval[1], height, primitive_only, workers) for n in values
    ]
    try:
        quads = enumerate_sl2_quads(field, height, workers=workers)
        rows = []
        for query in queries:
            report = _build_report(query, quads)
            rows.append(GrowthRow(query.max_norm, report.tau_hat, report.sigma_hat, report.mu_hat))
    except InvariantViolation:
        raise
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> building growth table: {e}")
        raise CensusGrowthError(f"Error '{e.__class__.__name__}' -> building growth table: {e}") from e
    return GrowthTable(field, height, tuple(rows))
