# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import logging

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple, TypeVar, Union

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.common.systole_enums import ElementType
from jr_systole.field.quad_field import (
    FieldDescriptor,
    FieldElement,
    IntegerRingElement,
    RATIONALS,
    divides,
    format_element,
    parse_element,
)
from jr_systole.exceptions.exceptions_kleinian import (
    KleinianConstructionError,
    KleinianDeterminantError,
    KleinianClassificationError,
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

Entry = Union[int, str, FieldElement]
T = TypeVar("T")


def _check_field(field: FieldDescriptor) -> None:
    if not (field.is_rational or field.is_imaginary):
        raise KleinianConstructionError(f"{field} is a real quadratic field; expected Q or an imaginary field")


@dataclass(frozen=True, slots=True)
class NormalizedTrace:
    """
    NormalizedTrace
    ===============
    mu * (a + d) with mu in {+1, -1} chosen so that the value is a
    nonnegative real or has argument in (0, pi). The sign is decided exactly
    from the coordinates.

    Attributes:
        value (FieldElement) :
            The normalized trace.
        mu (int) :
            The sign that was applied to the raw trace.
    """
    value: FieldElement
    mu: int = 1

    @staticmethod
    def of(raw: Union[FieldElement, "NormalizedTrace", int, str]) -> "NormalizedTrace":
        """Normalizes a raw trace (idempotent on NormalizedTrace)."""
        if isinstance(raw, NormalizedTrace):
            return raw
        if isinstance(raw, str):
            raw = parse_element(raw)
        elif isinstance(raw, int) and not isinstance(raw, bool):
            raw = FieldElement(raw, 0, RATIONALS)
        if not isinstance(raw, FieldElement):
            raise KleinianClassificationError(f"Cannot read a trace from {type(raw).__name__}")
        _check_field(raw.field)
        # imaginary part has the sign of b; on the real axis the sign of a decides
        if raw.b != 0:
            mu = 1 if raw.b > 0 else -1
        else:
            mu = 1 if raw.a >= 0 else -1
        return NormalizedTrace(raw if mu > 0 else -raw, mu)

    @property
    def field(self) -> FieldDescriptor:
        return self.value.field

    def is_real(self) -> bool:
        return self.value.b == 0

    def to_complex(self) -> complex:
        return self.value.to_complex()

    def __str__(self) -> str:
        return format_element(self.value)


def classify(t: Union[NormalizedTrace, FieldElement]) -> ElementType:
    """
    classify
    ========
    Real |t| < 2 is elliptic, t = +-2 is parabolic or the identity, every
    other trace (every non-real trace included) is loxodromic.
    """
    value = NormalizedTrace.of(t).value
    if value.b != 0:
        return ElementType.LOXODROMIC
    magnitude = abs(value.a)
    if magnitude < 2:
        return ElementType.ELLIPTIC
    if magnitude == 2:
        return ElementType.PARABOLIC_OR_IDENTITY
    return ElementType.LOXODROMIC


def chebyshev_trace(x: T, k: int) -> T:
    """
    p_k with p_k(tr g) = tr(g^k): p_0 = 2, p_1 = x, p_(k+1) = x p_k - p_(k-1).
    Works for field elements, complex numbers and integers.
    """
    if not isinstance(k, int) or k < 0:
        raise KleinianClassificationError(f"Power must be a nonnegative integer, got {k}")
    previous, current = 2 + 0 * x, x
    if k == 0:
        return previous
    for _ in range(k - 1):
        previous, current = current, x * current - previous
    return current

# -------------------------------------------------------------------------------------------------
# CLasses
# -------------------------------------------------------------------------------------------------

class MoebiusElement:
    """
    MoebiusElement
    ==============
    The matrix [[a, b], [c, d]] with ring-integer entries of Q or an imaginary
    quadratic field and determinant exactly 1. Identified with its negative
    when read in PSL(2, C).

    Attributes:
        a, b, c, d (IntegerRingElement) :
            The entries.
        field (FieldDescriptor) :
            Field of the entries.
    """

    # ------------
    # Slots

    __slots__ = (
        "_a",
        "_b",
        "_c",
        "_d",
    )

    # ------------
    # Attributes

    _a: IntegerRingElement
    _b: IntegerRingElement
    _c: IntegerRingElement
    _d: IntegerRingElement

    # ------------
    # Constructor

    def __init__(
        self,
        a: Entry,
        b: Entry,
        c: Entry,
        d: Entry,
        field: Optional[FieldDescriptor] = None,
    ) -> None:
        try:
            raw = [a, b, c, d]
            if field is None:
                field = next((x.field for x in raw if isinstance(x, FieldElement)), RATIONALS)
            _check_field(field)
            entries = []
            for value in raw:
                if isinstance(value, str):
                    value = parse_element(value, field)
                elif not isinstance(value, FieldElement):
                    value = FieldElement(value, 0, field)
                if value.field != field:
                    raise ValueError(f"Entry {value} is not in {field}")
                entries.append(IntegerRingElement.of(value))
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> constructing Moebius element: {e}")
            raise KleinianConstructionError(
                f"Error '{e.__class__.__name__}' -> constructing Moebius element: {e}"
            ) from e

        self._a, self._b, self._c, self._d = entries
        det = self._a * self._d - self._b * self._c
        if det != 1:
            LOGGER.error(f"Error 'KleinianDeterminantError' -> determinant {format_element(det)}")
            raise KleinianDeterminantError(f"Determinant is {format_element(det)}, expected 1")

    @classmethod
    def _raw(
        cls,
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        d: FieldElement,
    ) -> "MoebiusElement":
        """Unchecked constructor for products of certified elements."""
        obj = object.__new__(MoebiusElement)
        obj._a = IntegerRingElement.of(a)
        obj._b = IntegerRingElement.of(b)
        obj._c = IntegerRingElement.of(c)
        obj._d = IntegerRingElement.of(d)
        return obj

    @staticmethod
    def identity(field: FieldDescriptor = RATIONALS) -> "MoebiusElement":
        return MoebiusElement(1, 0, 0, 1, field)

    # ------------
    # Properties

    @property
    def a(self) -> IntegerRingElement:
        return self._a

    @property
    def b(self) -> IntegerRingElement:
        return self._b

    @property
    def c(self) -> IntegerRingElement:
        return self._c

    @property
    def d(self) -> IntegerRingElement:
        return self._d

    @property
    def entries(self) -> Tuple[IntegerRingElement, ...]:
        return (self._a, self._b, self._c, self._d)

    @property
    def field(self) -> FieldDescriptor:
        return self._a.field

    # ------------
    # Magic Methods

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MoebiusElement):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        a, b, c, d = (format_element(x) for x in self.entries)
        return f"MoebiusElement([[{a}, {b}], [{c}, {d}]])"

    def __mul__(self, other: "MoebiusElement") -> "MoebiusElement":
        if not isinstance(other, MoebiusElement):
            return NotImplemented
        if other.field != self.field:
            raise KleinianConstructionError(f"Fields differ: {self.field} and {other.field}")
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MoebiusElement._raw(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __neg__(self) -> "MoebiusElement":
        return self.negate()

    # ------------
    # Methods

    def negate(self) -> "MoebiusElement":
        return MoebiusElement._raw(-self._a, -self._b, -self._c, -self._d)

    def inverse(self) -> "MoebiusElement":
        return MoebiusElement._raw(self._d, -self._b, -self._c, self._a)

    def power(self, k: int) -> "MoebiusElement":
        """g^k for any integer k."""
        if not isinstance(k, int):
            raise KleinianConstructionError(f"Power must be an integer, got {k}")
        base = self if k >= 0 else self.inverse()
        result = MoebiusElement.identity(self.field)
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def trace(self) -> FieldElement:
        """Raw trace a + d."""
        return self._a + self._d

    def normalized_trace(self) -> NormalizedTrace:
        return NormalizedTrace.of(self.trace())

    def is_identity(self, projective: bool = True) -> bool:
        """True for the identity matrix (or its negative when ``projective``)."""
        if self._b or self._c or self._a != self._d:
            return False
        return self._a == 1 or (projective and self._a == -1)

    def element_type(self) -> ElementType:
        """Like ``classify`` but separates parabolic elements from the identity."""
        kind = classify(self.normalized_trace())
        if kind is ElementType.PARABOLIC_OR_IDENTITY:
            return ElementType.IDENTITY if self.is_identity() else ElementType.PARABOLIC
        return kind

    def congruence_sign(self, level: FieldElement) -> Optional[int]:
        """
        congruence_sign
        ===============
        +1 if the matrix is the identity mod ``level``, -1 if it is minus the
        identity mod ``level``, None otherwise.
        """
        if not (divides(level, self._b) and divides(level, self._c)):
            return None
        for sign in (1, -1):
            if divides(level, self._a - sign) and divides(level, self._d - sign):
                return sign
        return None

    def is_congruent_identity(self, level: FieldElement, projective: bool = True) -> bool:
        sign = self.congruence_sign(level)
        if sign is None:
            return False
        return sign == 1 or projective

    def height(self) -> int:
        """Largest coordinate height over the four entries."""
        return max(x.height() for x in self.entries)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "a": format_element(self._a),
            "b": format_element(self._b),
            "c": format_element(self._c),
            "d": format_element(self._d),
            "field": str(self.field),
        }
