# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import math
import pytest

from fractions import Fraction
from typing import Final

# Local imports
from jr_systole.field.quad_field import FieldElement, ideal_norm, parse_element
from jr_systole.clifford.clifford_algebra import CliffordElement, DiagonalForm, SpinElement
from jr_systole.clifford.quaternion_slice import E01, E02
from jr_systole.salem.salem_quartic import (
    SalemQuartic,
    angle_covering_scan,
    angle_covering_witness,
    asymptotic_level_constant,
    certify_surface_systole,
    choose_rotation_power,
    excluded_angles,
    is_salem_numeric,
    level_from_salem,
    salem_from_spin,
    salem_minimal_polynomial,
    salem_power,
    salem_power_direct,
    salem_powers,
)
from jr_systole.exceptions.exceptions_salem import (
    SalemCertificationError,
    SalemConstructionError,
    SalemNotLoxodromicError,
    SalemPowerError,
)

# -------------------------------------------------------------------------------------------------
# Fixtures
# -------------------------------------------------------------------------------------------------

@pytest.fixture
def degenerate() -> SalemQuartic:
    """lambda = 2 + sqrt(3) over Q."""
    return SalemQuartic(FieldElement(2))

@pytest.fixture
def golden() -> SalemQuartic:
    """t = (3 + sqrt(5)) / 2 over Q(sqrt(5))."""
    return SalemQuartic(parse_element("3/2+1/2*sqrt(5)"))

@pytest.fixture
def silver() -> SalemQuartic:
    """t = 2 + sqrt(2) over Q(sqrt(2))."""
    return SalemQuartic(parse_element("2+sqrt(2)"))

# -------------------------------------------------------------------------------------------------
# Test Cases
# -------------------------------------------------------------------------------------------------

ROTATION_CASES: Final = [
    # t, m
    ("2", 0),
    ("3/2+1/2*sqrt(5)", 1),
    ("2+sqrt(2)", 2),
    ("1+sqrt(2)", 2),
    ("6+4*sqrt(2)", 1),
]

BAD_INPUTS: Final = [
    # t, u, D
    ("1", 1, None),
    ("2", 1, 4),
    ("2", 2, None),
    ("3+sqrt(2)", 1, None),
    ("2+sqrt(-1)", 1, None),
]

# -------------------------------------------------------------------------------------------------
# Tests
# -------------------------------------------------------------------------------------------------

def test_construction(degenerate, golden):
    """D defaults to t^2 - 1 and the field follows t."""
    assert degenerate.D == 3
    assert degenerate.degenerate
    assert golden.D == parse_element("5/2+3/2*sqrt(5)")
    assert not golden.degenerate
    assert float(degenerate.lam()) == pytest.approx(2 + math.sqrt(3))

@pytest.mark.parametrize("t, u, D", BAD_INPUTS)
def test_bad_inputs(t, u, D):
    """Norm, positivity and the conjugate bound |sigma(t)| < 1 are enforced."""
    x = parse_element(t) if "sqrt" in t else FieldElement(int(t))
    with pytest.raises(SalemConstructionError):
        SalemQuartic(x, u, D)

def test_from_spin():
    """(t, u, D) = (|s_R|, 1, s_R^2 - 1) for loxodromic spin elements."""
    form = DiagonalForm([1, 1, 1])
    s = SpinElement(CliffordElement(form, {0: 3, E01: 2, E02: 2}))
    sq = salem_from_spin(s)
    assert (sq.t, sq.u, sq.D) == (3, 1, 8)
    assert salem_from_spin(-s.element) == sq
    with pytest.raises(SalemNotLoxodromicError):
        salem_from_spin(CliffordElement.scalar(form, 1))

def test_power_values(degenerate):
    """lambda^3 = 26 + 15 sqrt(3)."""
    power = salem_power(degenerate, 2)
    assert (power.t, power.u) == (26, 15)
    assert salem_power(degenerate, 0).t == 2

@pytest.mark.parametrize("t", ["2", "3/2+1/2*sqrt(5)", "2+sqrt(2)", "6+4*sqrt(2)"])
def test_recurrence_matches_direct(t):
    """The linear recurrence and repeated squaring agree for n <= 50."""
    sq = SalemQuartic(parse_element(t))
    for n in range(51):
        fast = salem_power(sq, n)
        direct = salem_power_direct(sq, n)
        assert (fast.t, fast.u) == (direct.t, direct.u)
        assert fast.t * fast.t - fast.u * fast.u * sq.D == 1

def test_powers_with_general_u():
    """(7, 4, 3) is the square of (2, 1, 3), so its n-th power is the (2n+1)-th."""
    square = SalemQuartic(FieldElement(7), 4, 3)
    base = SalemQuartic(FieldElement(2))
    for n in range(10):
        assert salem_power(square, n).t == salem_power(base, 2 * n + 1).t

def test_power_errors(degenerate):
    """Exponents are nonnegative integers."""
    with pytest.raises(SalemPowerError):
        salem_power(degenerate, -1)
    with pytest.raises(SalemPowerError):
        salem_power_direct(degenerate, True)
    assert len(salem_powers(degenerate, 4)) == 5

@pytest.mark.parametrize("t, m", ROTATION_CASES)
def test_choose_rotation_power(t, m):
    """Smallest m with sigma(t_m)^2 > 1/2."""
    assert choose_rotation_power(SalemQuartic(parse_element(t))) == m

def test_degenerate_level(degenerate):
    """Over Q, x0 = 2 gives alpha = 15 and l = 2."""
    cert = level_from_salem(degenerate)
    assert (cert.m, cert.l) == (0, 2)
    assert cert.alpha == 15
    assert (cert.t_l, cert.u_l) == (26, 15)
    assert cert.checks[1].skipped
    level = cert.to_level()
    assert level.tau_rep == 26

def test_degenerate_certificate(degenerate):
    """225 / 2 - 1 >= 26 and 225 / 2 >= 52."""
    cert = certify_surface_systole(degenerate)
    assert cert.certified
    data = cert.as_dict()
    assert data["alpha_l"] == "15"
    assert data["alpha_norm"] == 15
    assert data["t_l"] == "26"
    assert len(data["checks"]) == 4

def test_golden_certificate(golden):
    """m = 1 and alpha = 323 + 144 sqrt(5) of norm 649."""
    cert = certify_surface_systole(golden)
    assert cert.m == 1
    assert cert.l == 5
    assert cert.alpha == parse_element("323+144*sqrt(5)")
    assert ideal_norm(cert.alpha) == 649
    assert all(check.holds for check in cert.checks)
    assert cert.certified

def test_silver_level(silver):
    """m = 2 and alpha = 44375 + 31376 sqrt(2) of norm 233873."""
    cert = level_from_salem(silver)
    assert cert.m == 2
    assert cert.l == 8
    assert cert.alpha == parse_element("44375+31376*sqrt(2)")
    assert ideal_norm(cert.alpha) == 233873
    assert cert.t_m == parse_element("74+53*sqrt(2)")

def test_certification_degree(degenerate):
    """Only degrees 1 and 2 are meaningful."""
    with pytest.raises(SalemCertificationError):
        certify_surface_systole(degenerate, degree=3)

def test_minimal_polynomial(degenerate, golden):
    """x^2 - 4x + 1 over Q and a palindromic quartic over Q(sqrt(5))."""
    assert salem_minimal_polynomial(degenerate) == [1, -4, 1]
    assert salem_minimal_polynomial(golden) == [Fraction(1), Fraction(-6), Fraction(6), Fraction(-6), Fraction(1)]

def test_is_salem_numeric(degenerate, golden, silver):
    """Quartic inputs have two roots on the unit circle; Q inputs are not Salem."""
    assert is_salem_numeric(golden)
    assert is_salem_numeric(silver)
    assert not is_salem_numeric(degenerate)

def test_asymptotic_level_constant():
    """2^(2m+2)."""
    assert [asymptotic_level_constant(m) for m in (0, 1, 2)] == [4, 16, 64]
    with pytest.raises(SalemPowerError):
        asymptotic_level_constant(3)

def test_angle_covering():
    """Every angle away from the excluded ones has a k with cos(2 k nu) > 0."""
    scan = angle_covering_scan(1e-3)
    assert scan.covered
    assert scan.samples > 3000
    assert scan.min_margin > 0
    assert angle_covering_witness(0.1) == 1
    assert angle_covering_witness(math.pi / 2) == 2
    with pytest.raises(SalemPowerError):
        angle_covering_scan(0)

def test_excluded_angles_are_exactly_the_uncovered_ones():
    """Only pi/4 and 3pi/4 have no witness; 3pi/8 and 5pi/8 are covered by k = 3."""
    assert excluded_angles() == pytest.approx((math.pi / 4, 3 * math.pi / 4))
    for angle in excluded_angles():
        assert angle_covering_witness(angle) is None
    assert angle_covering_witness(3 * math.pi / 8) == 3
    assert angle_covering_witness(5 * math.pi / 8) == 3

def test_angle_scan_agrees_with_witness():
    """The scan at 10^4 grid points and the pointwise witness use the same margin."""
    scan = angle_covering_scan(math.pi / 10_000)
    assert scan.covered
    assert scan.samples >= 9_990

    coarse = angle_covering_scan(1e-2)
    grid = [k * 1e-2 for k in range(1, 315)]
    kept = [nu for nu in grid if all(abs(nu - angle) > 5e-3 for angle in excluded_angles())]
    assert all(angle_covering_witness(nu) is not None for nu in kept)
    assert coarse.samples == len(kept)
