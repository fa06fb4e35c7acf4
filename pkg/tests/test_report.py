# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import json
import pytest

# Local imports
from jr_systole.common.systole_enums import ReportFormat
from jr_systole.field.quad_field import FieldDescriptor, FieldElement
from jr_systole.census.census_report import RECORD_COLUMNS, CensusQuery
from jr_systole.census.trace_census import trace_census
from jr_systole.salem.salem_quartic import SalemQuartic, certify_surface_systole
from jr_systole.report.report_save_comp import ReportConverters
from jr_systole.report.report_load_comp import ReportLoaders
from jr_systole.report.report_emitter import emit_json_lines, emit_report, load_report
from jr_systole.exceptions.exceptions_report import ReportConverterError, ReportEmitError, ReportLoaderError

# -------------------------------------------------------------------------------------------------
# Fixtures
# -------------------------------------------------------------------------------------------------

@pytest.fixture
def certificate():
    """Surface systole certificate of lambda = 2 + sqrt(3)."""
    return certify_surface_systole(SalemQuartic(FieldElement(2)))

@pytest.fixture
def census():
    """Census of Q(i) with N = 16 at height 2."""
    return trace_census(CensusQuery(FieldDescriptor.quadratic(-1), 16, height=2))

@pytest.fixture
def converters() -> ReportConverters:
    return ReportConverters()

@pytest.fixture
def loaders() -> ReportLoaders:
    return ReportLoaders()

# -------------------------------------------------------------------------------------------------
# Tests
# -------------------------------------------------------------------------------------------------

def test_default_converters(converters, loaders):
    """JSON, CSV and YAML are registered and cannot be removed."""
    assert set(converters.get_keys()) == {ReportFormat.JSON, ReportFormat.CSV, ReportFormat.YAML}
    assert ReportFormat.CSV in converters
    assert len(loaders) == 3
    with pytest.raises(ValueError):
        converters.remove_converter(ReportFormat.JSON)

def test_custom_converter(converters):
    """Extra converters can be registered and removed."""
    converters.add_converter(".txt", lambda payload: str(payload).encode("utf-8"))
    assert converters[".txt"]({"a": 1}) == b"{'a': 1}"
    converters.remove_converter(".txt")
    assert ".txt" not in converters
    with pytest.raises(TypeError):
        converters.add_converter(".txt", "not callable")

def test_json_is_deterministic(certificate):
    """Identical inputs give identical bytes with sorted keys."""
    first = emit_report(certificate)
    second = emit_report(certify_surface_systole(SalemQuartic(FieldElement(2))))
    assert first == second
    assert first.endswith(b"\n")
    loaded = json.loads(first)
    assert list(loaded) == sorted(loaded)
    assert loaded["alpha_l"] == "15"

def test_json_round_trip(certificate):
    """emit_report and load_report agree on JSON and YAML."""
    for fmt in (ReportFormat.JSON, ReportFormat.YAML):
        data = emit_report(certificate, fmt)
        assert load_report(data, fmt) == certificate.as_dict()

def test_census_csv(census):
    """CSV output has the fixed header and one line per record."""
    data = emit_report(census, ReportFormat.CSV)
    lines = data.decode("utf-8").splitlines()
    assert lines[0] == ",".join(RECORD_COLUMNS)
    assert len(lines) == len(census) + 1
    rows = load_report(data, ReportFormat.CSV)
    assert [row["trace"] for row in rows] == [row[0] for row in census.csv_rows()]

def test_csv_needs_rows(certificate):
    """Objects without csv_header and csv_rows cannot be emitted as CSV."""
    with pytest.raises(ReportConverterError):
        emit_report(certificate, ReportFormat.CSV)

def test_csv_row_length(converters):
    """Rows must match the header."""
    with pytest.raises(ReportConverterError):
        converters[ReportFormat.CSV](("a", "b"), [["1"]])

def test_unknown_format(certificate):
    """Formats outside the enum are rejected."""
    with pytest.raises(ReportConverterError):
        emit_report(certificate, ".xml")
    with pytest.raises(ReportConverterError):
        emit_report(object())

def test_write_to_path(certificate, tmp_path):
    """The file holds exactly the returned bytes and no temporary file remains."""
    path = tmp_path / "out" / "certificate.json"
    data = emit_report(certificate, ReportFormat.JSON, path)
    assert path.read_bytes() == data
    assert sorted(p.name for p in path.parent.iterdir()) == ["certificate.json"]

def test_write_errors(certificate, tmp_path):
    """A destination below a regular file cannot be written."""
    blocker = tmp_path / "blocker"
    blocker.write_text("x")
    with pytest.raises(ReportEmitError):
        emit_report(certificate, ReportFormat.JSON, blocker / "certificate.json")

def test_loader_errors(loaders):
    """Non-object payloads and non-bytes inputs are rejected."""
    with pytest.raises(ReportLoaderError):
        loaders.load(b"[1, 2]", ReportFormat.JSON)
    with pytest.raises(ReportLoaderError):
        loaders.load(b"- 1\n", ReportFormat.YAML)
    with pytest.raises(ReportLoaderError):
        loaders.load("{}", ReportFormat.JSON)

def test_json_lines(tmp_path):
    """One sorted JSON object per line."""
    path = tmp_path / "records.jsonl"
    data = emit_json_lines([{"b": 1, "a": 2}, {"c": 3}], path)
    assert data == b'{"a": 2, "b": 1}\n{"c": 3}\n'
    assert path.read_bytes() == data
