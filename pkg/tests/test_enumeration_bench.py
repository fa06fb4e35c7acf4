# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import time
import pytest

from fractions import Fraction

# Local imports
from jr_systole.field.quad_field import RATIONALS, FieldDescriptor, FieldElement
from jr_systole.clifford.clifford_algebra import CliffordElement, DiagonalForm, spin_power
from jr_systole.salem.salem_quartic import SalemQuartic, salem_power, salem_power_direct
from jr_systole.kleinian.sl2_enumerator import enumerate_sl2_quads
from jr_systole.census.census_report import CensusQuery
from jr_systole.census.trace_census import growth_table, trace_census

# -------------------------------------------------------------------------------------------------
# Fixtures
# -------------------------------------------------------------------------------------------------

@pytest.fixture
def q_i() -> FieldDescriptor:
    """Q(i)."""
    return FieldDescriptor.quadratic(-1)

@pytest.fixture
def golden() -> SalemQuartic:
    """lambda + 1/lambda = (3 + sqrt(5)) / 2."""
    field = FieldDescriptor.quadratic(5)
    return SalemQuartic(FieldElement(Fraction(3, 2), Fraction(1, 2), field))

# -------------------------------------------------------------------------------------------------
# Tests
# -------------------------------------------------------------------------------------------------

def test_bench_sl2_enumeration(benchmark, q_i):
    """SL(2, Z[i]) at height 2, single process."""
    quads = benchmark(enumerate_sl2_quads, q_i, 2, workers=1)
    assert quads

def test_bench_census(benchmark, q_i):
    """Census of Q(i) with N = 25 at height 2."""
    report = benchmark(trace_census, CensusQuery(q_i, 25, height=2))
    assert report.tau_hat > 0

def test_bench_salem_recurrence(benchmark, golden):
    """The four-term recurrence up to n = 200."""
    power = benchmark(salem_power, golden, 200)
    assert power.n == 200

def test_bench_spin_power(benchmark):
    """Twentieth power of 3 + 2 e01 + 2 e02."""
    s = CliffordElement(DiagonalForm([1, 1, 1]), {0: 3, 3: 2, 5: 2})
    result = benchmark(spin_power, s, 20)
    assert result.form == s.form

def test_recurrence_against_direct_power(golden):
    """Timing of the recurrence against repeated squaring."""
    print("Comparing the recurrence with the direct power for n = 300...")

    start_time: float = time.time()
    recurrence = salem_power(golden, 300)
    recurrence_time: float = time.time() - start_time
    print(f"Recurrence: {recurrence_time:.4f} seconds")

    start_time = time.time()
    direct = salem_power_direct(golden, 300)
    direct_time: float = time.time() - start_time
    print(f"Direct power: {direct_time:.4f} seconds")

    assert recurrence == direct

def test_growth_table_shares_enumeration(q_i):
    """One shared enumeration against one census per N."""
    n_list = [4, 9, 16, 25]

    start_time: float = time.time()
    table = growth_table(q_i, n_list, height=2)
    shared_time: float = time.time() - start_time
    print(f"Growth table over {n_list}: {shared_time:.4f} seconds")

    start_time = time.time()
    separate = [trace_census(CensusQuery(q_i, n, height=2)).tau_hat for n in n_list]
    separate_time: float = time.time() - start_time
    print(f"Separate censuses: {separate_time:.4f} seconds")

    assert [row.tau_hat for row in table.rows] == separate

def test_rational_enumeration_workers():
    """Worker pool against a single process on SL(2, Z) at height 10."""
    for workers in (1, 2):
        start_time: float = time.time()
        quads = enumerate_sl2_quads(RATIONALS, 10, workers=workers)
        print(f"workers={workers}: {len(quads)} matrices in {time.time() - start_time:.4f} seconds")
        assert quads
