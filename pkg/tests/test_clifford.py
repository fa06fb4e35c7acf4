# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import pytest

from typing import Final

# Local imports
from jr_systole.field.quad_field import RATIONALS, FieldDescriptor, FieldElement
from jr_systole.clifford.clifford_algebra import (
    CliffordElement,
    DiagonalForm,
    SpinElement,
    admissible_check,
    basis_mul,
    cliff_mul,
    clifford_from_json,
    clifford_to_json,
    embed_even_subalgebra,
    is_spin,
    mask_label,
    mask_of,
    spin_power,
    star,
)
from jr_systole.clifford.quaternion_slice import E01, E02, E12, enumerate_quaternion_spin, slice_norm
from jr_systole.cli.property_checks import basis_mul_oracle, check_clifford_axioms
from jr_systole.exceptions.exceptions_clifford import (
    CliffordAdmissibilityError,
    CliffordElementError,
    CliffordEmbeddingError,
    CliffordEnumerationError,
    CliffordFormError,
    CliffordMismatchError,
    CliffordSerializationError,
    CliffordSpinError,
)

# -------------------------------------------------------------------------------------------------
# Fixtures
# -------------------------------------------------------------------------------------------------

@pytest.fixture
def q_sqrt2() -> FieldDescriptor:
    """Q(sqrt(2))."""
    return FieldDescriptor.quadratic(2)

@pytest.fixture
def lorentz_form() -> DiagonalForm:
    """-x0^2 + x1^2 + x2^2 over Q."""
    return DiagonalForm([1, 1, 1])

@pytest.fixture
def spin_fixture(lorentz_form) -> CliffordElement:
    """3 + 2 e01 + 2 e02, a spin element of level 2."""
    return CliffordElement(lorentz_form, {0: 3, E01: 2, E02: 2})

# -------------------------------------------------------------------------------------------------
# Test Cases
# -------------------------------------------------------------------------------------------------

ORACLE_FORMS: Final = [
    # coefficients, d
    ([1, 1], 0),
    ([1, 1, 1], 0),
    ([2, 3, 5, 7], 0),
    ([1, 1, 1, 1, 1, 1], 0),
    (["1+sqrt(2)", "1", "2+sqrt(2)", "3"], 2),
]

ADMISSIBLE_CASES: Final = [
    # coefficients, d, admissible
    ([1, 1, 1], 0, True),
    ([1, -1, 1], 0, False),
    (["1+sqrt(2)", "1", "1"], 2, True),
    (["sqrt(2)", "1", "2+sqrt(2)"], 2, True),
    (["1", "1", "1"], 2, False),
    (["1+sqrt(2)", "1-sqrt(2)", "1"], 2, False),
]

BAD_FORMS: Final = [[1], [1, 0, 1], []]

# -------------------------------------------------------------------------------------------------
# Tests
# -------------------------------------------------------------------------------------------------

def test_masks():
    """Masks are bit sets of generator indices."""
    assert mask_of(0, 1) == 0b011
    assert mask_of(1, 2) == 0b110
    assert mask_label(0) == "1"
    assert mask_label(mask_of(0, 2)) == "e[0,2]"

@pytest.mark.parametrize("coefficients", BAD_FORMS)
def test_bad_forms(coefficients):
    """Forms need two generators and nonzero coefficients."""
    with pytest.raises(CliffordFormError):
        DiagonalForm(coefficients)

def test_generator_squares(lorentz_form):
    """e_0^2 = -a_0 and e_i^2 = a_i."""
    form = DiagonalForm([2, 3, 5])
    assert basis_mul(0b001, 0b001, form) == (FieldElement(-2), 0)
    assert basis_mul(0b010, 0b010, form) == (FieldElement(3), 0)
    assert basis_mul(0b100, 0b100, form) == (FieldElement(5), 0)
    assert lorentz_form.square(0) == -1

def test_anticommutation():
    """Distinct generators anticommute."""
    form = DiagonalForm([2, 3, 5])
    assert basis_mul(0b001, 0b010, form) == (FieldElement(1), 0b011)
    assert basis_mul(0b010, 0b001, form) == (FieldElement(-1), 0b011)
    # e01 e01 = -e0 e0 e1 e1 = a0 a1
    assert basis_mul(0b011, 0b011, form) == (FieldElement(6), 0)
    # e12 e12 = -a1 a2
    assert basis_mul(0b110, 0b110, form) == (FieldElement(-15), 0)

@pytest.mark.parametrize("coefficients, d", ORACLE_FORMS)
def test_basis_mul_matches_oracle(coefficients, d):
    """The sign and contraction rule agrees with word reduction on every pair of blades."""
    field = FieldDescriptor.quadratic(d) if d else RATIONALS
    form = DiagonalForm(coefficients, field)
    for left in range(form.full_mask + 1):
        for right in range(form.full_mask + 1):
            assert basis_mul(left, right, form) == basis_mul_oracle(left, right, form)

def test_bad_mask(lorentz_form):
    """Masks outside the algebra are rejected."""
    with pytest.raises(CliffordElementError):
        CliffordElement(lorentz_form, {0b1000: 1})

def test_mixed_forms(lorentz_form):
    """Elements of different algebras do not multiply."""
    other = DiagonalForm([1, 1, 2])
    with pytest.raises(CliffordMismatchError):
        cliff_mul(CliffordElement.scalar(lorentz_form), CliffordElement.scalar(other))

def test_zero_pruning(lorentz_form):
    """Zero coefficients are dropped and the element compares with scalars."""
    x = CliffordElement(lorentz_form, {0: 2, E01: 0})
    assert x.support == (0,)
    assert x == 2
    assert not (x - x)

def test_star_signs(lorentz_form):
    """Reversion flips blades of grade 2 and 3 and fixes grades 0, 1 and 4."""
    form = DiagonalForm([1, 1, 1, 1])
    x = CliffordElement(form, {0: 1, 0b0001: 1, 0b0011: 1, 0b0111: 1, 0b1111: 1})
    y = star(x)
    assert y.coefficient(0) == 1
    assert y.coefficient(0b0001) == 1
    assert y.coefficient(0b0011) == -1
    assert y.coefficient(0b0111) == -1
    assert y.coefficient(0b1111) == 1

def test_star_reverses_products(lorentz_form):
    """(xy)* = y* x*."""
    x = CliffordElement(lorentz_form, {0: 1, 0b001: 2, E12: -1})
    y = CliffordElement(lorentz_form, {0b010: 3, E02: 1, 0b111: 4})
    assert star(cliff_mul(x, y)) == cliff_mul(star(y), star(x))

def test_spin_fixture(spin_fixture):
    """3 + 2 e01 + 2 e02 is spin with norm 1 and inverse its conjugate."""
    verdict = is_spin(spin_fixture)
    assert verdict.spin, verdict.reason
    s = SpinElement(spin_fixture)
    assert s.real_part() == 3
    assert s.certificate.norm_one
    assert s.certificate.generators_checked == 3
    assert (s * s.inverse()).element == 1
    assert slice_norm(s.form, FieldElement(3), FieldElement(2), FieldElement(2), FieldElement(0)) == 1

def test_not_spin(lorentz_form):
    """Odd support, norms other than 1, and zero are rejected."""
    assert is_spin(CliffordElement.generator(lorentz_form, 1)).reason == "odd support"
    assert is_spin(CliffordElement(lorentz_form, {0: 2})).reason == "s s* != 1"
    assert not is_spin(CliffordElement(lorentz_form, {})).spin
    with pytest.raises(CliffordSpinError):
        SpinElement(CliffordElement(lorentz_form, {0: 2}))

def test_spin_power(spin_fixture):
    """Powers of a spin element stay spin; the square has real part 2*3^2 - 1."""
    square = spin_power(spin_fixture, 2)
    assert square == cliff_mul(spin_fixture, spin_fixture)
    assert square.real_part() == 17
    assert is_spin(spin_power(spin_fixture, 5)).spin
    assert spin_power(spin_fixture, 0) == 1
    with pytest.raises(CliffordElementError):
        spin_power(spin_fixture, -1)

@pytest.mark.parametrize("coefficients, d, admissible", ADMISSIBLE_CASES)
def test_admissible_check(coefficients, d, admissible):
    """Signature (n, 1) under the identity and definiteness under the conjugate."""
    field = FieldDescriptor.quadratic(d) if d else RATIONALS
    verdict = admissible_check(DiagonalForm(coefficients, field))
    assert verdict.admissible is admissible
    assert (verdict.reason == "") is admissible

def test_admissible_needs_real_field():
    """Imaginary fields have no admissibility notion."""
    with pytest.raises(CliffordAdmissibilityError):
        admissible_check(DiagonalForm([1, 1], FieldDescriptor.quadratic(-1)))

def test_embed_even_subalgebra(spin_fixture):
    """Spin elements of f' stay spin in the algebra of a longer form."""
    big = DiagonalForm([1, 1, 1, 1, 1])
    embedded = embed_even_subalgebra(SpinElement(spin_fixture), big)
    assert isinstance(embedded, SpinElement)
    assert embedded.form == big
    assert embedded.real_part() == 3
    with pytest.raises(CliffordEmbeddingError):
        embed_even_subalgebra(spin_fixture, DiagonalForm([1, 2, 1, 1]))
    with pytest.raises(CliffordEmbeddingError):
        embed_even_subalgebra(spin_fixture, DiagonalForm([1, 1]))

def test_json_round_trip(q_sqrt2):
    """Elements read back from their JSON form compare equal."""
    form = DiagonalForm(["1+sqrt(2)", "1", "1"], q_sqrt2)
    x = CliffordElement(form, {0: "3+2*sqrt(2)", E12: "-1"})
    data = clifford_to_json(x)
    assert data["field"] == 2
    assert data["terms"] == {"0": "3+2*sqrt(2)", str(E12): "-1"}
    assert clifford_from_json(data) == x

def test_json_errors():
    """Malformed JSON payloads raise CliffordSerializationError."""
    with pytest.raises(CliffordSerializationError):
        clifford_from_json([1, 2])
    with pytest.raises(CliffordSerializationError):
        clifford_from_json({"field": 0, "terms": {}})
    with pytest.raises(CliffordSerializationError):
        clifford_from_json({"field": 4, "form": ["1", "1"], "terms": {}})

def test_quaternion_slice_enumeration(lorentz_form, spin_fixture):
    """Every enumerated element is spin, and the level filter keeps the fixture."""
    found = enumerate_quaternion_spin(lorentz_form, 3)
    assert found
    for s in found:
        assert is_spin(s.element).spin
    assert SpinElement(CliffordElement.scalar(lorentz_form)) in found
    level_two = enumerate_quaternion_spin(lorentz_form, 3, level=FieldElement(2))
    assert SpinElement(spin_fixture) in level_two
    assert set(level_two) <= set(found)
    for s in level_two:
        for mask in (E01, E02, E12):
            assert s.element.coefficient(mask).a % 2 == 0

def test_quaternion_slice_errors(lorentz_form):
    """Only three-generator forms with a nonnegative height are enumerated."""
    with pytest.raises(CliffordEnumerationError):
        enumerate_quaternion_spin(DiagonalForm([1, 1]), 2)
    with pytest.raises(CliffordEnumerationError):
        enumerate_quaternion_spin(lorentz_form, -1)
    with pytest.raises(CliffordEnumerationError):
        enumerate_quaternion_spin(lorentz_form, 2, level=FieldElement(0))

def test_check_clifford_axioms():
    """The seeded property check passes and reports every basis pair."""
    report = check_clifford_axioms(DiagonalForm([1, 2, 3]), samples=50, seed=7)
    assert report["passed"]
    assert report["basis_pairs"] == 64
    assert report["basis_failures"] == []
