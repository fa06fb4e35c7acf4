# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import pytest

from fractions import Fraction
from typing import Final

# Local imports
from jr_systole.common.systole_enums import FieldOp
from jr_systole.field.quad_field import (
    RATIONALS,
    FieldDescriptor,
    FieldElement,
    IntegerRingElement,
    divides,
    element_norm,
    field_arith,
    field_from_int,
    format_element,
    galois_conj,
    ideal_norm,
    parse_element,
    parse_integer,
    ring_coordinates,
    ring_elements_in_disc,
    torsion_units,
)
from jr_systole.exceptions.exceptions_quad_field import (
    QuadFieldArithmeticError,
    QuadFieldConstructionError,
    QuadFieldDegreeError,
    QuadFieldIntegralityError,
    QuadFieldMismatchError,
    QuadFieldNormError,
    QuadFieldParseError,
)

# -------------------------------------------------------------------------------------------------
# Fixtures
# -------------------------------------------------------------------------------------------------

@pytest.fixture
def q_sqrt2() -> FieldDescriptor:
    """Q(sqrt(2))."""
    return FieldDescriptor.quadratic(2)

@pytest.fixture
def q_i() -> FieldDescriptor:
    """Q(i)."""
    return FieldDescriptor.quadratic(-1)

# -------------------------------------------------------------------------------------------------
# Test Cases
# -------------------------------------------------------------------------------------------------

BAD_RADICANDS: Final = [4, 8, -4, 12, 0]

FORMAT_CASES: Final = [
    # text, a, b, d
    ("3+2*sqrt(2)", Fraction(3), Fraction(2), 2),
    ("3-2*sqrt(2)", Fraction(3), Fraction(-2), 2),
    ("2*sqrt(-1)", Fraction(0), Fraction(2), -1),
    ("1/2+1/2*sqrt(5)", Fraction(1, 2), Fraction(1, 2), 5),
    ("-7", Fraction(-7), Fraction(0), None),
]

BAD_TEXTS: Final = ["", "3+", "sqrt(2", "3 2*sqrt(2)", "abc", "3+2*sqrt(x)"]

IDEAL_NORMS: Final = [
    # text, norm
    ("15", 15),
    ("-4", 4),
    ("1+sqrt(-1)", 2),
    ("3+2*sqrt(2)", 1),
    ("44375+31376*sqrt(2)", 233873),
    ("323+144*sqrt(5)", 649),
]

RING_COUNTS: Final = [
    # d, height, count
    (1, 2, 5),
    (-1, 1, 9),
    (-1, 2, 25),
    (-3, 1, 5),
    (2, 1, 9),
]

TORSION_COUNTS: Final = [(-1, 4), (-3, 6), (-2, 2), (-5, 2), (1, 2), (2, 2)]

# -------------------------------------------------------------------------------------------------
# Tests
# -------------------------------------------------------------------------------------------------

def test_field_from_int():
    """0 and 1 select Q, other radicands a quadratic field."""
    assert field_from_int(0) == RATIONALS
    assert field_from_int(1) == RATIONALS
    assert field_from_int(-1) == FieldDescriptor(-1, 2)
    assert field_from_int(5).half_integral
    assert not field_from_int(-1).half_integral
    assert field_from_int(-1).is_imaginary
    assert field_from_int(2).is_real

@pytest.mark.parametrize("d", BAD_RADICANDS)
def test_bad_radicands(d):
    """Radicands that are not squarefree, or 0, are rejected."""
    with pytest.raises(QuadFieldConstructionError):
        FieldDescriptor.quadratic(d)

def test_rational_elements_reject_sqrt_part():
    """Elements of Q have no sqrt coordinate."""
    with pytest.raises(QuadFieldConstructionError):
        FieldElement(1, 1, RATIONALS)

@pytest.mark.parametrize("text, a, b, d", FORMAT_CASES)
def test_parse_and_format(text, a, b, d):
    """parse_element reads the canonical form and format_element writes it back."""
    x = parse_element(text)
    assert (x.a, x.b) == (a, b)
    if d is None:
        assert x.field == RATIONALS
    else:
        assert x.field.d == d
    assert format_element(x) == text

@pytest.mark.parametrize("text", BAD_TEXTS)
def test_parse_errors(text):
    """Malformed strings raise QuadFieldParseError."""
    with pytest.raises(QuadFieldParseError):
        parse_element(text)

def test_parse_into_given_field(q_i):
    """A rational string can be read into a given field; a wrong radicand cannot."""
    x = parse_element("3", q_i)
    assert x.field == q_i
    with pytest.raises(QuadFieldParseError):
        parse_element("1+sqrt(2)", q_i)

def test_field_arith(q_sqrt2):
    """Exact arithmetic in Q(sqrt(2))."""
    x = FieldElement(1, 1, q_sqrt2)
    y = FieldElement(1, -1, q_sqrt2)
    assert field_arith(x, y, FieldOp.MUL) == -1
    assert field_arith(x, y, FieldOp.ADD) == 2
    assert field_arith(x, y, FieldOp.SUB) == FieldElement(0, 2, q_sqrt2)
    assert field_arith(x, y, FieldOp.DIV) == FieldElement(-3, -2, q_sqrt2)
    assert x ** 2 == FieldElement(3, 2, q_sqrt2)
    assert x ** -1 == FieldElement(-1, 1, q_sqrt2)

def test_field_arith_errors(q_sqrt2, q_i):
    """Division by zero and mixed fields raise the matching errors."""
    with pytest.raises(QuadFieldArithmeticError):
        field_arith(FieldElement(1, 0, q_sqrt2), FieldElement(0, 0, q_sqrt2), FieldOp.DIV)
    with pytest.raises(QuadFieldMismatchError):
        field_arith(FieldElement(1, 0, q_sqrt2), FieldElement(1, 0, q_i), FieldOp.ADD)

def test_integrality():
    """Half-integral rings accept (x + y sqrt(d)) / 2 with x = y mod 2."""
    assert parse_element("1/2+1/2*sqrt(5)").is_integral()
    assert not parse_element("1/2+1/2*sqrt(2)").is_integral()
    assert not parse_element("1/2+1/2*sqrt(-1)").is_integral()
    assert parse_element("1/2+1/2*sqrt(-3)").is_integral()
    assert not parse_element("1/2").is_integral()
    with pytest.raises(QuadFieldIntegralityError):
        IntegerRingElement(Fraction(1, 2), Fraction(1, 2), FieldDescriptor.quadratic(2))
    with pytest.raises(QuadFieldIntegralityError):
        parse_integer("1/3")

def test_galois_conj_and_norm(q_sqrt2):
    """sigma flips the sqrt part; the norm is x sigma(x) and is multiplicative."""
    x = FieldElement(3, 2, q_sqrt2)
    y = FieldElement(1, -1, q_sqrt2)
    assert galois_conj(x) == FieldElement(3, -2, q_sqrt2)
    assert x * galois_conj(x) == element_norm(x)
    assert element_norm(x) == 1
    assert element_norm(x * y) == element_norm(x) * element_norm(y)
    assert element_norm(FieldElement(Fraction(-5, 2))) == Fraction(-5, 2)
    with pytest.raises(QuadFieldDegreeError):
        galois_conj(FieldElement(3))

@pytest.mark.parametrize("text, norm", IDEAL_NORMS)
def test_ideal_norm(text, norm):
    """|N(alpha)| of integral elements."""
    assert ideal_norm(parse_element(text)) == norm

def test_ideal_norm_of_zero():
    """The zero ideal has no norm."""
    with pytest.raises(QuadFieldNormError):
        ideal_norm(FieldElement(0))

def test_divides(q_i):
    """(1+i) divides 2 and not 1+2i; 2 does not divide 1+i."""
    one_plus_i = FieldElement(1, 1, q_i)
    assert divides(one_plus_i, FieldElement(2, 0, q_i))
    assert not divides(FieldElement(2, 0, q_i), one_plus_i)
    assert not divides(one_plus_i, FieldElement(1, 2, q_i))

def test_exact_signs(q_sqrt2):
    """Signs under both real embeddings are decided exactly."""
    x = FieldElement(1, -1, q_sqrt2)
    assert x.sign() == -1
    assert x.sigma_sign() == 1
    assert FieldElement(74, 53, q_sqrt2).sigma_sign() == -1
    assert FieldElement(3, -2, q_sqrt2).sign() == 1
    assert FieldElement(3, -2, q_sqrt2) < 1

def test_sign_errors(q_i):
    """Non-real values have no sign and Q has no second embedding."""
    with pytest.raises(QuadFieldDegreeError):
        FieldElement(1, 1, q_i).sign()
    with pytest.raises(QuadFieldDegreeError):
        FieldElement(1).sigma_sign()

def test_sqrt_exact(q_sqrt2, q_i):
    """Exact square roots inside the field, None otherwise."""
    assert FieldElement(3, 2, q_sqrt2).sqrt_exact() == FieldElement(1, 1, q_sqrt2)
    assert FieldElement(2, 0, q_sqrt2).sqrt_exact() == FieldElement(0, 1, q_sqrt2)
    assert FieldElement(-1, 0, q_i).sqrt_exact() == FieldElement(0, 1, q_i)
    assert FieldElement(2).sqrt_exact() is None
    assert FieldElement(Fraction(9, 4)).sqrt_exact() == Fraction(3, 2)
    assert FieldElement(3, 0, q_sqrt2).sqrt_exact() is None

def test_numeric_embeddings(q_sqrt2, q_i):
    """Floats, complex values and mpmath values of the identity embedding."""
    assert FieldElement(1, 1, q_sqrt2).to_float() == pytest.approx(2.414213562373095)
    assert FieldElement(2, 3, q_i).to_complex() == complex(2, 3)
    assert float(FieldElement(1, 1, q_sqrt2).sigma_to_mpf()) == pytest.approx(-0.41421356237309503)

@pytest.mark.parametrize("d, height, count", RING_COUNTS)
def test_ring_coordinates(d, height, count):
    """Number of ring integers of bounded height."""
    coords = ring_coordinates(field_from_int(d), height)
    assert len(coords) == count
    assert coords == sorted(coords)

def test_ring_elements_in_disc(q_i):
    """Integers of Q(i) in the closed unit disc are 0 and the four units."""
    values = ring_elements_in_disc(q_i, 1)
    assert len(values) == 5
    assert FieldElement(0, 0, q_i) in values

def test_disc_needs_definite_field(q_sqrt2):
    """Real quadratic fields have infinitely many integers in a disc."""
    with pytest.raises(QuadFieldDegreeError):
        ring_elements_in_disc(q_sqrt2, 4)

@pytest.mark.parametrize("d, count", TORSION_COUNTS)
def test_torsion_units(d, count):
    """Roots of unity of the ring of integers."""
    units = torsion_units(field_from_int(d))
    assert len(units) == count
    assert units[0] == 1
    for unit in units:
        assert ideal_norm(unit) == 1
        power = unit
        for _ in range(count - 1):
            power = power * unit
        assert power == 1

def test_rational_unit_norm():
    """Over Q the norm is the element itself, so -1 has norm -1 and ideal norm 1."""
    assert element_norm(FieldElement(-1)) == -1
    assert ideal_norm(FieldElement(-1)) == 1
