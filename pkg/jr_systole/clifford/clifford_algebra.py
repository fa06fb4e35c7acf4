# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import logging

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.field.quad_field import (
    FieldDescriptor,
    FieldElement,
    IntegerRingElement,
    RATIONALS,
    field_from_int,
    format_element,
    parse_element,
)
from jr_systole.exceptions.exceptions_clifford import (
    CliffordFormError,
    CliffordElementError,
    CliffordMaskError,
    CliffordMismatchError,
    CliffordAdmissibilityError,
    CliffordSpinError,
    CliffordEmbeddingError,
    CliffordSerializationError,
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
# Constants
# -------------------------------------------------------------------------------------------------

MAX_DIMENSION: int = 12

Scalar = Union[int, Fraction, FieldElement]

# -------------------------------------------------------------------------------------------------
# Mask helpers
# -------------------------------------------------------------------------------------------------

def mask_of(*indices: int) -> int:
    """Bit mask of a set of generator indices, e.g. mask_of(0, 1) -> e_{01}."""
    mask = 0
    for index in indices:
        if index < 0 or index > MAX_DIMENSION:
            raise CliffordMaskError(f"Generator index {index} outside 0..{MAX_DIMENSION}")
        mask |= 1 << index
    return mask


def mask_indices(mask: int) -> Tuple[int, ...]:
    """Sorted generator indices of a mask."""
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def mask_label(mask: int) -> str:
    if mask == 0:
        return "1"
    return "e[" + ",".join(str(i) for i in mask_indices(mask)) + "]"


@lru_cache(maxsize=1 << 16)
def reorder_sign(left: int, right: int) -> int:
    """
    Sign picked up when the word e_left e_right is sorted: every generator j of
    ``right`` moves past each generator of ``left`` with a larger index.
    """
    swaps = 0
    for j in mask_indices(right):
        swaps += (left >> (j + 1)).bit_count()
    return -1 if swaps & 1 else 1


def star_sign(mask: int) -> int:
    """(-1)^(nu(nu-1)/2) with nu the number of generators in the mask."""
    return -1 if mask.bit_count() % 4 in (2, 3) else 1

# -------------------------------------------------------------------------------------------------
# Verdicts
# -------------------------------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class AdmissibleVerdict:
    """Result of ``admissible_check``; ``reason`` is empty when admissible."""
    admissible: bool
    reason: str
    identity_signs: Tuple[int, ...]
    sigma_signs: Optional[Tuple[int, ...]]


@dataclass(frozen=True, slots=True)
class SpinVerdict:
    """Result of ``is_spin``; ``reason`` is empty when spin."""
    spin: bool
    reason: str


@dataclass(frozen=True, slots=True)
class SpinCertificate:
    """Records which parts of the spin condition were verified."""
    even_support: bool
    norm_one: bool
    generators_checked: int

# -------------------------------------------------------------------------------------------------
# CLasses
# -------------------------------------------------------------------------------------------------

class DiagonalForm:
    """
    DiagonalForm
    ============
    The quadratic form f = -a_0 x_0^2 + a_1 x_1^2 + ... + a_n x_n^2 with
    nonzero integral coefficients over Q or a quadratic field.
    The generator squares are f(e_0) = -a_0 and f(e_i) = a_i.

    Attributes:
        coefficients (Tuple[IntegerRingElement, ...]) :
            (a_0, ..., a_n), with a_0 stored unsigned.
        field (FieldDescriptor) :
            Field of the coefficients.
        n (int) :
            Index of the last generator.
    """

    # ------------
    # Slots

    __slots__ = (
        "_coefficients",
        "_field",
        "_squares",
        "_contractions",
    )

    # ------------
    # Attributes

    _coefficients: Tuple[IntegerRingElement, ...]
    _field: FieldDescriptor
    _squares: Tuple[FieldElement, ...]
    _contractions: Dict[int, FieldElement]

    # ------------
    # Constructor

    def __init__(
        self,
        coefficients: Sequence[Union[Scalar, str]],
        field: FieldDescriptor = RATIONALS,
    ) -> None:
        try:
            if not isinstance(field, FieldDescriptor):
                raise TypeError(f"field must be a FieldDescriptor, got {type(field).__name__}")
            if len(coefficients) < 2:
                raise ValueError("A form needs at least two generators")
            if len(coefficients) > MAX_DIMENSION + 1:
                raise ValueError(f"At most {MAX_DIMENSION + 1} generators are supported")
            coeffs: List[IntegerRingElement] = []
            for value in coefficients:
                if isinstance(value, str):
                    value = parse_element(value, field)
                elif not isinstance(value, FieldElement):
                    value = FieldElement(value, 0, field)
                if value.field != field:
                    raise ValueError(f"Coefficient {value} is not in {field}")
                if not value:
                    raise ValueError("Form coefficients must be nonzero")
                coeffs.append(IntegerRingElement.of(value))
            self._coefficients = tuple(coeffs)
            self._field = field
            self._squares = (-coeffs[0],) + tuple(coeffs[1:])
            self._contractions = {}
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> constructing diagonal form: {e}")
            raise CliffordFormError(
                f"Error '{e.__class__.__name__}' -> constructing diagonal form: {e}"
            ) from e

    # ------------
    # Properties

    @property
    def coefficients(self) -> Tuple[IntegerRingElement, ...]:
        return self._coefficients

    @property
    def field(self) -> FieldDescriptor:
        return self._field

    @property
    def n(self) -> int:
        return len(self._coefficients) - 1

    @property
    def full_mask(self) -> int:
        return (1 << len(self._coefficients)) - 1

    # ------------
    # Magic Methods

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DiagonalForm):
            return NotImplemented
        return self._field == other._field and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash((self._field, self._coefficients))

    def __repr__(self) -> str:
        coeffs = ", ".join(format_element(c) for c in self._coefficients)
        return f"DiagonalForm([{coeffs}], field={self._field})"

    # ------------
    # Methods

    def square(self, index: int) -> FieldElement:
        """f(e_index)."""
        return self._squares[index]

    def contraction(self, mask: int) -> FieldElement:
        """Product of f(e_v) over the generators v of ``mask``."""
        cached = self._contractions.get(mask)
        if cached is None:
            cached = FieldElement(1, 0, self._field)
            for v in mask_indices(mask):
                cached = cached * self._squares[v]
            self._contractions[mask] = cached
        return cached

    def restrict(self, count: int) -> "DiagonalForm":
        """The form on the first ``count`` generators."""
        return DiagonalForm(self._coefficients[:count], self._field)

    def check_mask(self, mask: int) -> None:
        if not isinstance(mask, int) or mask < 0 or mask > self.full_mask:
            raise CliffordMaskError(f"Mask {mask} outside the algebra of {self!r}")


class CliffordElement:
    """
    CliffordElement
    ===============
    A finitely supported combination sum_M s_M e_M in the Clifford algebra of a
    diagonal form. Zero coefficients are never stored, so structural equality is
    mathematical equality. Values are immutable.

    Attributes:
        form (DiagonalForm) :
            The form the algebra is built on.
        terms (Tuple[Tuple[int, FieldElement], ...]) :
            (mask, coefficient) pairs sorted by mask.

    Methods:
    -----------------
        ### real_part() -> FieldElement :
            Coefficient of the empty mask.
        ### star() -> CliffordElement :
            The anti-involution e_M* = (-1)^(nu(nu-1)/2) e_M.
        ### is_even() / is_integral() -> bool
        ### coefficient(mask) -> FieldElement
    """

    # ------------
    # Slots

    __slots__ = (
        "_form",
        "_terms",
    )

    # ------------
    # Attributes

    _form: DiagonalForm
    _terms: Dict[int, FieldElement]

    # ------------
    # Constructor

    def __init__(
        self,
        form: DiagonalForm,
        terms: Optional[Mapping[int, Union[Scalar, str]]] = None,
    ) -> None:
        try:
            if not isinstance(form, DiagonalForm):
                raise TypeError(f"form must be a DiagonalForm, got {type(form).__name__}")
            clean: Dict[int, FieldElement] = {}
            for mask, value in (terms or {}).items():
                form.check_mask(mask)
                if isinstance(value, str):
                    value = parse_element(value, form.field)
                elif not isinstance(value, FieldElement):
                    value = FieldElement(value, 0, form.field)
                if value.field != form.field:
                    raise ValueError(f"Coefficient {value} is not in {form.field}")
                if value:
                    clean[mask] = value
            self._form = form
            self._terms = dict(sorted(clean.items()))
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> constructing Clifford element: {e}")
            raise CliffordElementError(
                f"Error '{e.__class__.__name__}' -> constructing Clifford element: {e}"
            ) from e

    @classmethod
    def _raw(cls, form: DiagonalForm, terms: Dict[int, FieldElement]) -> "CliffordElement":
        obj = object.__new__(CliffordElement)
        obj._form = form
        obj._terms = dict(sorted((m, c) for m, c in terms.items() if c))
        return obj

    @staticmethod
    def scalar(form: DiagonalForm, value: Union[Scalar, str] = 1) -> "CliffordElement":
        return CliffordElement(form, {0: value})

    @staticmethod
    def generator(form: DiagonalForm, index: int) -> "CliffordElement":
        return CliffordElement(form, {mask_of(index): 1})

    # ------------
    # Properties

    @property
    def form(self) -> DiagonalForm:
        return self._form

    @property
    def terms(self) -> Tuple[Tuple[int, FieldElement], ...]:
        return tuple(self._terms.items())

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(self._terms)

    # ------------
    # Magic Methods

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CliffordElement):
            return self._form == other._form and self._terms == other._terms
        if isinstance(other, (int, Fraction, FieldElement)) and not isinstance(other, bool):
            if not other:
                return not self._terms
            return list(self._terms) == [0] and self._terms[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._form, tuple(self._terms.items())))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        return f"CliffordElement({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mask, coeff in self._terms.items():
            text = format_element(coeff)
            parts.append(text if mask == 0 else f"({text})*{mask_label(mask)}")
        return " + ".join(parts)

    def _check_same_form(self, other: "CliffordElement") -> None:
        if not isinstance(other, CliffordElement):
            raise CliffordMismatchError(f"Expected a CliffordElement, got {type(other).__name__}")
        if other._form != self._form:
            raise CliffordMismatchError("Operands are attached to different forms")

    def __neg__(self) -> "CliffordElement":
        return CliffordElement._raw(self._form, {m: -c for m, c in self._terms.items()})

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        self._check_same_form(other)
        out = dict(self._terms)
        for mask, coeff in other._terms.items():
            out[mask] = out[mask] + coeff if mask in out else coeff
        return CliffordElement._raw(self._form, out)

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + (-other)

    def __mul__(self, other: Union["CliffordElement", Scalar]) -> "CliffordElement":
        if isinstance(other, CliffordElement):
            return cliff_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: Scalar) -> "CliffordElement":
        return self.scale(other)

    # ------------
    # Methods

    def scale(self, value: Scalar) -> "CliffordElement":
        if not isinstance(value, FieldElement):
            value = FieldElement(value, 0, self._form.field)
        return CliffordElement._raw(self._form, {m: c * value for m, c in self._terms.items()})

    def coefficient(self, mask: int) -> FieldElement:
        return self._terms.get(mask, FieldElement(0, 0, self._form.field))

    def real_part(self) -> FieldElement:
        return self.coefficient(0)

    def star(self) -> "CliffordElement":
        return CliffordElement._raw(
            self._form, {m: c if star_sign(m) > 0 else -c for m, c in self._terms.items()}
        )

    def is_even(self) -> bool:
        return all(mask.bit_count() % 2 == 0 for mask in self._terms)

    def is_integral(self) -> bool:
        """True when every coefficient lies in the ring of integers (membership in the order)."""
        return all(c.is_integral() for c in self._terms.values())


class SpinElement:
    """
    SpinElement
    ===========
    A Clifford element certified at construction to be even, to satisfy
    s s* = 1 and to map every generator to the span of the generators under
    x -> s x s*.

    Attributes:
        element (CliffordElement) :
            The underlying Clifford element.
        certificate (SpinCertificate) :
            What was verified.
    """

    __slots__ = (
        "_element",
        "_certificate",
    )

    _element: CliffordElement
    _certificate: SpinCertificate

    def __init__(self, element: CliffordElement) -> None:
        verdict = is_spin(element)
        if not verdict.spin:
            LOGGER.error(f"Error 'CliffordSpinError' -> {element} is not spin: {verdict.reason}")
            raise CliffordSpinError(f"{element} is not a spin element: {verdict.reason}")
        self._element = element
        self._certificate = SpinCertificate(
            even_support=True,
            norm_one=True,
            generators_checked=element.form.n + 1,
        )

    @property
    def element(self) -> CliffordElement:
        return self._element

    @property
    def certificate(self) -> SpinCertificate:
        return self._certificate

    @property
    def form(self) -> DiagonalForm:
        return self._element.form

    def real_part(self) -> FieldElement:
        return self._element.real_part()

    def inverse(self) -> "SpinElement":
        """star(s), which is the inverse of a spin element."""
        return SpinElement(self._element.star())

    def __mul__(self, other: "SpinElement") -> "SpinElement":
        if not isinstance(other, SpinElement):
            raise CliffordMismatchError(f"Expected a SpinElement, got {type(other).__name__}")
        return SpinElement(cliff_mul(self._element, other._element))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SpinElement):
            return self._element == other._element
        return self._element == other

    def __hash__(self) -> int:
        return hash(self._element)

    def __repr__(self) -> str:
        return f"SpinElement({self._element})"

# -------------------------------------------------------------------------------------------------
# Operations
# -------------------------------------------------------------------------------------------------

def admissible_check(form: DiagonalForm) -> AdmissibleVerdict:
    """
    admissible_check
    ================
    Signature (n, 1) at the identity embedding (every a_i > 0 under the -a_0
    convention) and, for real quadratic fields, sigma(a_0) < 0 < sigma(a_i)
    for i >= 1 so that f^sigma is definite. Signs are decided exactly.

    Raises:
        CliffordAdmissibilityError : the form lives over an imaginary field.
    """
    if form.field.is_imaginary:
        LOGGER.error(f"Error 'CliffordAdmissibilityError' -> admissibility over {form.field}")
        raise CliffordAdmissibilityError(f"Admissibility is undefined over the imaginary field {form.field}")

    identity = tuple(c.sign() for c in form.coefficients)
    for index, sign in enumerate(identity):
        if sign <= 0:
            return AdmissibleVerdict(
                False, f"a_{index} is not positive under the identity embedding", identity, None
            )
    if form.field.degree == 1:
        return AdmissibleVerdict(True, "", identity, None)

    sigma = tuple(c.sigma_sign() for c in form.coefficients)
    if sigma[0] >= 0:
        return AdmissibleVerdict(False, "sigma(a_0) is not negative", identity, sigma)
    for index, sign in enumerate(sigma[1:], start=1):
        if sign <= 0:
            return AdmissibleVerdict(False, f"sigma(a_{index}) is not positive", identity, sigma)
    return AdmissibleVerdict(True, "", identity, sigma)


def basis_mul(left: int, right: int, form: DiagonalForm) -> Tuple[FieldElement, int]:
    """
    basis_mul
    =========
    e_left * e_right = coeff * e_(left xor right).

    Returns:
        out (Tuple[FieldElement, int]) :
            The coefficient (reordering sign times the contracted squares) and the mask.
    """
    form.check_mask(left)
    form.check_mask(right)
    common = left & right
    coeff = form.contraction(common)
    if reorder_sign(left, right) < 0:
        coeff = -coeff
    return coeff, left ^ right


def cliff_mul(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    """Bilinear extension of ``basis_mul``."""
    x._check_same_form(y)
    form = x.form
    acc: Dict[int, FieldElement] = {}
    for left, a in x._terms.items():
        for right, b in y._terms.items():
            coeff, mask = basis_mul(left, right, form)
            value = coeff * a * b
            acc[mask] = acc[mask] + value if mask in acc else value
    return CliffordElement._raw(form, acc)


def star(x: CliffordElement) -> CliffordElement:
    return x.star()


def real_part(x: Union[CliffordElement, SpinElement]) -> FieldElement:
    return x.real_part()


def is_spin(x: CliffordElement) -> SpinVerdict:
    """
    is_spin
    =======
    Spin iff the support is even, x x* = 1, and x e_i x* lies on singleton
    masks for every generator e_i.
    """
    if not isinstance(x, CliffordElement):
        raise CliffordSpinError(f"Expected a CliffordElement, got {type(x).__name__}")
    if not x:
        return SpinVerdict(False, "zero element")
    if not x.is_even():
        return SpinVerdict(False, "odd support")
    conjugate = x.star()
    if cliff_mul(x, conjugate) != 1:
        return SpinVerdict(False, "s s* != 1")
    for index in range(x.form.n + 1):
        image = cliff_mul(cliff_mul(x, CliffordElement.generator(x.form, index)), conjugate)
        if any(mask.bit_count() != 1 for mask in image.support):
            return SpinVerdict(False, f"s e_{index} s* leaves the span of the generators")
    return SpinVerdict(True, "")


def spin_power(s: Union[CliffordElement, SpinElement], k: int) -> CliffordElement:
    """s^k for k >= 0 by repeated squaring."""
    element = s.element if isinstance(s, SpinElement) else s
    if not isinstance(k, int) or k < 0:
        raise CliffordElementError(f"Exponent must be a nonnegative integer, got {k}")
    result = CliffordElement.scalar(element.form, 1)
    base = element
    while k:
        if k & 1:
            result = cliff_mul(result, base)
        base = cliff_mul(base, base)
        k >>= 1
    return result


def embed_even_subalgebra(
    x: Union[CliffordElement, SpinElement],
    form: DiagonalForm,
) -> Union[CliffordElement, SpinElement]:
    """
    embed_even_subalgebra
    =====================
    Reinterprets an element over f' in the algebra of f, where f' is f
    restricted to its first generators. Spin inputs are re-certified in the
    larger algebra.

    Raises:
        CliffordEmbeddingError : f' is not a restriction of f.
    """
    element = x.element if isinstance(x, SpinElement) else x
    small = element.form
    try:
        if small.field != form.field:
            raise ValueError(f"Fields differ: {small.field} and {form.field}")
        if small.n > form.n:
            raise ValueError("The target form has fewer generators than the source")
        for index, coeff in enumerate(small.coefficients):
            if form.coefficients[index] != coeff:
                raise ValueError(
                    f"a_{index} differs: {coeff} in the source and {form.coefficients[index]} in the target"
                )
        embedded = CliffordElement._raw(form, dict(element._terms))
        if isinstance(x, SpinElement):
            return SpinElement(embedded)
        return embedded
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> embedding into the larger algebra: {e}")
        raise CliffordEmbeddingError(
            f"Error '{e.__class__.__name__}' -> embedding into the larger algebra: {e}"
        ) from e

# -------------------------------------------------------------------------------------------------
# JSON
# -------------------------------------------------------------------------------------------------

def clifford_to_json(x: Union[CliffordElement, SpinElement]) -> Dict[str, Any]:
    """{"field": d, "form": [...], "terms": {"mask": "coefficient"}}, with d = 0 for Q."""
    element = x.element if isinstance(x, SpinElement) else x
    field = element.form.field
    return {
        "field": 0 if field.is_rational else field.d,
        "form": [format_element(c) for c in element.form.coefficients],
        "terms": {str(mask): format_element(c) for mask, c in element.terms},
    }


def clifford_from_json(data: Mapping[str, Any]) -> CliffordElement:
    try:
        if not isinstance(data, Mapping):
            raise TypeError(f"Expected a JSON object, got {type(data).__name__}")
        field = field_from_int(int(data.get("field", 0)))
        form = DiagonalForm(list(data["form"]), field)
        terms = {int(mask): str(value) for mask, value in dict(data.get("terms", {})).items()}
        return CliffordElement(form, terms)
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> reading Clifford element from JSON: {e}")
        raise CliffordSerializationError(
            f"Error '{e.__class__.__name__}' -> reading Clifford element from JSON: {e}"
        ) from e


def form_from_strings(values: Iterable[str], field: FieldDescriptor) -> DiagonalForm:
    return DiagonalForm([parse_element(v, field) for v in values], field)
