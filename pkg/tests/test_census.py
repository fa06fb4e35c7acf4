# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import math
import pytest

from fractions import Fraction
from typing import Final

# Local imports
from jr_systole.field.quad_field import RATIONALS, FieldDescriptor, FieldElement
from jr_systole.census.census_report import GROWTH_COLUMNS, RECORD_COLUMNS, CensusQuery
import jr_systole.census.trace_census as census_module
from jr_systole.census.trace_census import growth_table, lattice_count, primitive_trace_filter, trace_census
from jr_systole.exceptions.exceptions_quad_field import QuadFieldIntegralityViolation
from jr_systole.exceptions.exceptions_census import (
    CensusGrowthError,
    CensusLatticeError,
    CensusPrimitiveError,
    CensusQueryError,
)

# -------------------------------------------------------------------------------------------------
# Fixtures
# -------------------------------------------------------------------------------------------------

@pytest.fixture
def q_i() -> FieldDescriptor:
    """Q(i)."""
    return FieldDescriptor.quadratic(-1)

@pytest.fixture
def gaussian_report(q_i):
    """Census of Q(i) with N = 1 at height 2."""
    return trace_census(CensusQuery(q_i, 1, height=2))

# -------------------------------------------------------------------------------------------------
# Test Cases
# -------------------------------------------------------------------------------------------------

LATTICE_CASES: Final = [
    # d, radius, count
    (-1, 0, 1),
    (-1, 1, 5),
    (-1, 2, 13),
    (-1, 5, 81),
    (0, 3, 7),
    (-3, 1, 7),
]

PRIMITIVE_CASES: Final = [
    # trace, max_k, primitive
    (3, 2, True),
    (7, 2, False),
    (18, 2, True),
    (18, 3, False),
    (47, 2, False),
]

BAD_QUERIES: Final = [
    # d, N, hol_lo, hol_hi, height
    (2, 1, 0.0, 1.0, 2),
    (-1, -1, 0.0, 1.0, 2),
    (-1, 1, 2.0, 1.0, 2),
    (-1, 1, 0.0, 7.0, 2),
    (-1, 1, 0.0, 1.0, 0),
]

# -------------------------------------------------------------------------------------------------
# Tests
# -------------------------------------------------------------------------------------------------

@pytest.mark.parametrize("d, radius, count", LATTICE_CASES)
def test_lattice_count(d, radius, count):
    """Ring integers in the closed disc of the given radius."""
    field = FieldDescriptor.quadratic(d) if d else RATIONALS
    assert lattice_count(field, radius) == count

@pytest.mark.parametrize("radius", [10, 20, 40])
def test_lattice_count_grows_like_area(q_i, radius):
    """count / R^2 lies within 4 / R of pi."""
    assert abs(lattice_count(q_i, radius) / radius**2 - math.pi) <= 4 / radius

def test_lattice_count_errors(q_i):
    """Real fields and negative radii are rejected."""
    with pytest.raises(CensusLatticeError):
        lattice_count(FieldDescriptor.quadratic(2), 1)
    with pytest.raises(CensusLatticeError):
        lattice_count(q_i, -1)

@pytest.mark.parametrize("trace, max_k, primitive", PRIMITIVE_CASES)
def test_primitive_trace_filter(trace, max_k, primitive):
    """7 = p_2(3), 18 = p_3(3) and 47 = p_2(7) are traces of powers."""
    assert primitive_trace_filter(FieldElement(trace), max_k) is primitive

def test_primitive_trace_filter_errors():
    """Only loxodromic traces and max_k >= 2 are accepted."""
    with pytest.raises(CensusPrimitiveError):
        primitive_trace_filter(FieldElement(1))
    with pytest.raises(CensusPrimitiveError):
        primitive_trace_filter(FieldElement(3), 1)

@pytest.mark.parametrize("d, N, hol_lo, hol_hi, height", BAD_QUERIES)
def test_bad_queries(d, N, hol_lo, hol_hi, height):
    """Real fields, negative N, bad intervals and zero height are rejected."""
    field = FieldDescriptor.quadratic(d) if d else RATIONALS
    with pytest.raises(CensusQueryError):
        CensusQuery(field, N, hol_lo, hol_hi, height)

def test_gaussian_census(gaussian_report, q_i):
    """Only the trace i has |t|^2 <= 1 and is loxodromic."""
    assert gaussian_report.tau_hat == 1
    record = gaussian_report.records[0]
    assert record.trace == FieldElement(0, 1, q_i)
    assert record.trace_norm == 1
    assert record.realization_count > 0
    assert record.holonomy_reduced == pytest.approx(math.pi, abs=1e-12)
    assert gaussian_report.mu_hat == Fraction(gaussian_report.sigma_hat, 1)

def test_rational_census():
    """Over Q at height 2 only the trace 3 occurs: four matrices on two axes."""
    report = trace_census(CensusQuery(RATIONALS, 25, height=2))
    assert report.tau_hat == 1
    record = report.records[0]
    assert record.trace == 3
    assert record.realization_count == 4
    assert record.axis_class_count == 2
    assert record.primitive
    assert report.sigma_hat == 2

def test_holonomy_interval(q_i):
    """The trace i has holonomy pi and falls outside [0, 1]."""
    report = trace_census(CensusQuery(q_i, 1, 0.0, 1.0, height=2))
    assert report.tau_hat == 0
    assert report.mu_hat is None
    assert report.get_summary()["mu_hat"] is None

def test_record_order_and_rows(q_i):
    """Records are sorted by (|t|^2, Re, Im) and rows follow the column order."""
    report = trace_census(CensusQuery(q_i, 16, height=2))
    keys = [(r.trace_norm, r.trace.a, r.trace.b) for r in report.records]
    assert keys == sorted(keys)
    assert report.csv_header() == RECORD_COLUMNS
    for row in report.csv_rows():
        assert len(row) == len(RECORD_COLUMNS)
    assert report.as_dict()["tau_hat"] == report.tau_hat

def test_primitive_only(q_i):
    """primitive_only drops exactly the records flagged as powers."""
    everything = trace_census(CensusQuery(q_i, 40, height=3))
    primitive = trace_census(CensusQuery(q_i, 40, height=3, primitive_only=True))
    assert [r for r in everything.records if r.primitive] == list(primitive.records)

def test_census_workers_agree(q_i):
    """Parallel enumeration gives the same records in the same order."""
    single = trace_census(CensusQuery(q_i, 16, height=2, workers=1))
    parallel = trace_census(CensusQuery(q_i, 16, height=2, workers=4))
    assert single.records == parallel.records
    assert single.csv_rows() == parallel.csv_rows()

def test_print_report(gaussian_report, capsys):
    """The printed summary lists the counts."""
    gaussian_report.print_report()
    out = capsys.readouterr().out
    assert "Census Report:" in out
    assert "tau_hat: 1" in out

def test_growth_table(q_i):
    """Rows match separate censuses at the same height."""
    table = growth_table(q_i, [1, 4, 9], height=2)
    assert len(table) == 3
    for row in table.rows:
        report = trace_census(CensusQuery(q_i, row.N, height=2))
        assert (row.tau_hat, row.sigma_hat, row.mu_hat) == (report.tau_hat, report.sigma_hat, report.mu_hat)
    taus = [row.tau_hat for row in table.rows]
    assert taus == sorted(taus)
    assert table.csv_header() == GROWTH_COLUMNS
    first = table.csv_rows()[0]
    assert first[0] == "1"
    assert first[4] == ""

def test_growth_table_errors(q_i):
    """The N list must be nonempty and strictly increasing."""
    with pytest.raises(CensusGrowthError):
        growth_table(q_i, [], height=2)
    with pytest.raises(CensusGrowthError):
        growth_table(q_i, [4, 4], height=2)
    with pytest.raises(CensusGrowthError):
        growth_table(q_i, [9, 1], height=2)

def test_census_keeps_invariant_violations(q_i, monkeypatch):
    """A broken integrality invariant reaches the caller unwrapped."""
    def broken(*args, **kwargs):
        raise QuadFieldIntegralityViolation("product left the ring")

    monkeypatch.setattr(census_module, "enumerate_sl2_quads", broken)
    with pytest.raises(QuadFieldIntegralityViolation):
        trace_census(CensusQuery(q_i, 1, height=2))
    with pytest.raises(QuadFieldIntegralityViolation):
        growth_table(q_i, [1, 4], height=2)
