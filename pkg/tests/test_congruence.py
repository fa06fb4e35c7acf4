# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import math
import pytest

from fractions import Fraction
from typing import Final

# Local imports
from jr_systole.field.quad_field import FieldDescriptor, FieldElement
from jr_systole.clifford.clifford_algebra import CliffordElement, DiagonalForm, SpinElement
from jr_systole.clifford.quaternion_slice import E01, E02, E12, enumerate_quaternion_spin
from jr_systole.congruence.congruence_groups import (
    CongruenceLevel,
    bound_reports,
    in_gamma_alpha,
    in_gamma_tau_alpha,
    index_upper_bound,
    kissing_lower_bound,
    length_lower_bound,
    realpart_lower_bound,
    realpart_residue,
    realpart_residue_shifted,
    shifted_lower_bound,
)
from jr_systole.exceptions.exceptions_congruence import (
    CongruenceBoundError,
    CongruenceLevelError,
    CongruenceMembershipError,
    CongruenceResidueError,
)

# -------------------------------------------------------------------------------------------------
# Fixtures
# -------------------------------------------------------------------------------------------------

@pytest.fixture
def form() -> DiagonalForm:
    """-x0^2 + x1^2 + x2^2 over Q."""
    return DiagonalForm([1, 1, 1])

def _slice(form: DiagonalForm, x0: int, x1: int, x2: int, x3: int) -> SpinElement:
    return SpinElement(CliffordElement(form, {0: x0, E01: x1, E02: x2, E12: x3}))

# -------------------------------------------------------------------------------------------------
# Test Cases
# -------------------------------------------------------------------------------------------------

MEMBERSHIP_CASES: Final = [
    # coordinates, alpha, member, residue
    ((3, 2, 2, 0), 2, True, 1),
    ((-7, 8, 0, 4), 4, True, -1),
    ((10, 12, 6, 9), 3, True, 2),
    ((-8, 6, 6, 3), 3, True, -2),
    ((1, 0, 0, 0), 5, True, 0),
    ((3, 2, 2, 0), 4, False, None),
    ((7, 8, 0, 4), 4, False, None),
]

KISSING_CASES: Final = [
    # classes, order, cap, bound
    (3, 10, 4, 7),
    (1, 1, 1, 1),
    (5, 120, 8, 75),
]

# -------------------------------------------------------------------------------------------------
# Tests
# -------------------------------------------------------------------------------------------------

@pytest.mark.parametrize("coords, alpha, member, residue", MEMBERSHIP_CASES)
def test_membership_and_residue(form, coords, alpha, member, residue):
    """Membership in Gamma(alpha) and the integral residue 2 (s_R - 1) / alpha^2."""
    s = _slice(form, *coords)
    assert in_gamma_alpha(s, FieldElement(alpha)) is member
    if member:
        assert realpart_residue(s, FieldElement(alpha)) == residue
    else:
        with pytest.raises(CongruenceResidueError):
            realpart_residue(s, FieldElement(alpha))

def test_tau_extension(form):
    """With tau = -1 mod 4, real parts congruent to -1 are admitted as well."""
    level = CongruenceLevel(FieldElement(4), FieldElement(-1))
    assert level.norm == 4
    assert in_gamma_tau_alpha(_slice(form, 7, 8, 0, 4), level)
    assert in_gamma_tau_alpha(_slice(form, -7, 8, 0, 4), level)
    assert not in_gamma_tau_alpha(_slice(form, 3, 2, 2, 0), level)

def test_tau_errors(form):
    """tau must square to 1 modulo the level, and must be present."""
    with pytest.raises(CongruenceLevelError):
        CongruenceLevel(FieldElement(4), FieldElement(2))
    with pytest.raises(CongruenceLevelError):
        CongruenceLevel(FieldElement(0))
    with pytest.raises(CongruenceMembershipError):
        in_gamma_tau_alpha(_slice(form, 3, 2, 2, 0), CongruenceLevel(FieldElement(2)))

def test_membership_errors(form):
    """Non-integral elements and bad levels are rejected."""
    half = CliffordElement(form, {0: Fraction(1, 2)})
    with pytest.raises(CongruenceMembershipError):
        in_gamma_alpha(half, FieldElement(2))
    s = _slice(form, 3, 2, 2, 0)
    with pytest.raises(CongruenceLevelError):
        in_gamma_alpha(s, FieldElement(0))
    with pytest.raises(CongruenceLevelError):
        in_gamma_alpha(s, FieldElement(2, 0, FieldDescriptor.quadratic(2)))

def test_shifted_residue(form):
    """The real part of a product of two Gamma(3) members moves by a multiple of 9/2."""
    s = _slice(form, 10, 12, 6, 9)
    r = _slice(form, -8, 6, 6, 3)
    assert realpart_residue_shifted(s, r, FieldElement(3)) == -2
    with pytest.raises(CongruenceResidueError):
        realpart_residue_shifted(s, _slice(form, 3, 2, 2, 0), FieldElement(3))

def test_realpart_lower_bound():
    """N(alpha)^2 / 2^(2d-1) - 1."""
    assert realpart_lower_bound(FieldElement(3), 1) == Fraction(7, 2)
    assert realpart_lower_bound(FieldElement(15), 1) == Fraction(223, 2)
    q5 = FieldDescriptor.quadratic(5)
    assert realpart_lower_bound(FieldElement(323, 144, q5), 2) == Fraction(649 * 649, 8) - 1

def test_gamma_three_members_respect_bound(form):
    """Members of Gamma(3) with real part other than 1 have |s_R| at least the bound."""
    bound = realpart_lower_bound(FieldElement(3), 1)
    members = enumerate_quaternion_spin(form, 12, level=FieldElement(3))
    assert len(members) > 1
    for s in members:
        if s.real_part() != 1:
            assert abs(s.real_part().a) >= bound

def test_shifted_lower_bound():
    """Exact for rational inputs, float otherwise."""
    q5 = FieldDescriptor.quadratic(5)
    assert shifted_lower_bound(FieldElement(15, 0, q5), 26, 2) == Fraction(50417, 8)
    assert float(shifted_lower_bound(FieldElement(15, 0, q5), 26, 2)) == 6302.125
    assert shifted_lower_bound(FieldElement(15), 26, 1) == Fraction(173, 2)
    assert isinstance(shifted_lower_bound(FieldElement(15), 2.5, 1), float)
    with pytest.raises(CongruenceBoundError):
        shifted_lower_bound(FieldElement(15), -1, 1)
    with pytest.raises(CongruenceBoundError):
        shifted_lower_bound(FieldElement(15), 1, 3)

def test_length_lower_bound():
    """2 arcosh(|r_R|) above 1 and 0 at or below."""
    assert length_lower_bound(1) == 0.0
    assert length_lower_bound(Fraction(1, 2)) == 0.0
    assert length_lower_bound(Fraction(7, 2)) == pytest.approx(2 * math.acosh(3.5))
    q2 = FieldDescriptor.quadratic(2)
    assert length_lower_bound(FieldElement(1, 1, q2)) == pytest.approx(2 * math.acosh(1 + math.sqrt(2)))
    with pytest.raises(CongruenceBoundError):
        length_lower_bound(-2)

def test_index_upper_bound():
    """N(alpha)^(n(n+1)/2)."""
    assert index_upper_bound(FieldElement(3), 2) == 27
    assert index_upper_bound(FieldElement(2), 3) == 64
    with pytest.raises(CongruenceBoundError):
        index_upper_bound(FieldElement(3), 1)
    with pytest.raises(CongruenceBoundError):
        index_upper_bound(FieldElement(0), 2)

@pytest.mark.parametrize("classes, order, cap, bound", KISSING_CASES)
def test_kissing_lower_bound(classes, order, cap, bound):
    """floor(classes * |G| / cap)."""
    assert kissing_lower_bound(classes, order, cap) == bound

def test_kissing_errors():
    """Inputs must be positive integers."""
    with pytest.raises(CongruenceBoundError):
        kissing_lower_bound(0, 10, 2)
    with pytest.raises(CongruenceBoundError):
        kissing_lower_bound(1, True, 2)

def test_bound_reports():
    """Every bound of a level with its inputs, in a fixed order."""
    reports = bound_reports(FieldElement(3), 1)
    assert [r.name for r in reports] == [
        "realpart_lower_bound",
        "shifted_lower_bound",
        "length_lower_bound",
        "index_upper_bound",
    ]
    first = reports[0].as_dict()
    assert first["value"] == "7/2"
    assert first["certified"]
    assert "tol" not in first
    assert reports[2].as_dict()["tol"] == 1e-12
    assert reports[3].value == 27
