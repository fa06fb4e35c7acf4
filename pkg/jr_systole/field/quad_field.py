# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import math
import re
import logging

import mpmath

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from sympy import factorint

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.common.systole_enums import FieldOp
from jr_systole.exceptions.exceptions_quad_field import (
    QuadFieldConstructionError,
    QuadFieldMismatchError,
    QuadFieldArithmeticError,
    QuadFieldDegreeError,
    QuadFieldParseError,
    QuadFieldNormError,
    QuadFieldDivisibilityError,
    QuadFieldIntegralityError,
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

Rational = Union[int, Fraction]

_ELEMENT_PATTERN = re.compile(
    r"""^\s*
    (?P<a>[+-]?\d+(?:/\d+)?)?
    \s*
    (?:
        (?P<sign>[+-])?\s*
        (?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?
        sqrt\(\s*(?P<d>[+-]?\d+)\s*\)
    )?
    \s*$""",
    re.VERBOSE,
)

# -------------------------------------------------------------------------------------------------
# Field descriptor
# -------------------------------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class FieldDescriptor:
    """
    FieldDescriptor
    ===============
    Describes Q (``degree == 1``, ``d == 1``) or the quadratic field Q(sqrt(d))
    with ``d`` a squarefree integer different from 0 and 1.

    Attributes:
        d (int) :
            The radicand. Positive for real fields, negative for imaginary ones,
            1 for the rational marker.
        degree (int) :
            1 for Q, 2 for a quadratic field.
    """

    d: int
    degree: int

    def __post_init__(self) -> None:
        try:
            if not isinstance(self.d, int) or isinstance(self.d, bool):
                raise TypeError(f"d must be an integer, got {type(self.d)}")
            if self.degree not in (1, 2):
                raise ValueError(f"Only degrees 1 and 2 are supported, got {self.degree}")
            if self.degree == 1:
                if self.d != 1:
                    raise ValueError(f"The rational field is marked by d = 1, got {self.d}")
                return
            if self.d in (0, 1):
                raise ValueError(f"d must be different from 0 and 1, got {self.d}")
            if not _is_squarefree(self.d):
                raise ValueError(f"d = {self.d} is not squarefree")
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> constructing field descriptor: {e}")
            raise QuadFieldConstructionError(
                f"Error '{e.__class__.__name__}' -> constructing field descriptor: {e}"
            ) from e

    # ------------
    # Constructors

    @staticmethod
    def rational() -> "FieldDescriptor":
        """Returns the descriptor of Q."""
        return FieldDescriptor(1, 1)

    @staticmethod
    def quadratic(d: int) -> "FieldDescriptor":
        """Returns the descriptor of Q(sqrt(d))."""
        return FieldDescriptor(d, 2)

    # ------------
    # Properties

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    @property
    def is_real(self) -> bool:
        """True for Q and for real quadratic fields."""
        return self.degree == 1 or self.d > 0

    @property
    def is_imaginary(self) -> bool:
        return self.degree == 2 and self.d < 0

    @property
    def half_integral(self) -> bool:
        """True when the ring of integers uses the basis (1 + sqrt(d)) / 2."""
        return self.degree == 2 and self.d % 4 == 1

    def __str__(self) -> str:
        if self.is_rational:
            return "Q"
        return f"Q(sqrt({self.d}))"


RATIONALS: FieldDescriptor = FieldDescriptor.rational()


@lru_cache(maxsize=256)
def _is_squarefree(d: int) -> bool:
    return all(exponent == 1 for exponent in factorint(abs(d)).values())


def field_from_int(d: int) -> FieldDescriptor:
    """
    field_from_int
    ==============
    Maps the integer used on the command line to a field descriptor.
    0 and 1 both select Q; any other value selects Q(sqrt(d)).
    """
    if d in (0, 1):
        return RATIONALS
    return FieldDescriptor.quadratic(d)

# -------------------------------------------------------------------------------------------------
# Helpers
# -------------------------------------------------------------------------------------------------

def _to_fraction(value: Union[Rational, str]) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("Booleans are not field coordinates")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Coordinates must be int, Fraction or str, got {type(value).__name__}")


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    num_root = math.isqrt(q.numerator)
    den_root = math.isqrt(q.denominator)
    if num_root * num_root != q.numerator or den_root * den_root != q.denominator:
        return None
    return Fraction(num_root, den_root)


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def _sign_of(a: Fraction, b: Fraction, d: int) -> int:
    """
    Exact sign of a + b*sqrt(d) for d > 0, decided by comparing a^2 with b^2 * d.
    """
    if b == 0:
        return _sign(a)
    if a == 0:
        return _sign(b)
    sign_a, sign_b = _sign(a), _sign(b)
    if sign_a == sign_b:
        return sign_a
    # d is not a square, so a^2 == b^2 d cannot happen here
    return sign_a if a * a > b * b * d else sign_b

# -------------------------------------------------------------------------------------------------
# CLasses
# -------------------------------------------------------------------------------------------------

class FieldElement:
    """
    FieldElement
    ============
    An exact element a + b*sqrt(d) of Q or of a quadratic field.
    Values are immutable and hashable; equality is coordinate-wise.

    Attributes:
        a (Fraction) :
            Rational coordinate.
        b (Fraction) :
            Coefficient of sqrt(d); always 0 in Q.
        field (FieldDescriptor) :
            The field the element lives in.

    Methods:
    -----------------
        ### galois_conj() -> FieldElement :
            a - b*sqrt(d) (degree 2 only).
        ### norm() -> Fraction :
            x * sigma(x) in degree 2, x itself in Q.
        ### is_integral() -> bool :
            Membership in the ring of integers.
        ### sign() / sigma_sign() -> int :
            Exact signs under the identity / nontrivial real embedding.
        ### sqrt_exact() -> Optional[FieldElement] :
            An exact square root in the same field, if one exists.
        ### to_complex() / to_float() / to_mpf(dps) :
            Numeric embeddings (identity embedding for real fields).
    """

    # ------------
    # Slots

    __slots__ = (
        "_a",
        "_b",
        "_field",
    )

    # ------------
    # Attributes

    _a: Fraction
    _b: Fraction
    _field: FieldDescriptor

    # ------------
    # Constructor

    def __init__(
        self,
        a: Union[Rational, str] = 0,
        b: Union[Rational, str] = 0,
        field: FieldDescriptor = RATIONALS,
    ) -> None:
        try:
            if not isinstance(field, FieldDescriptor):
                raise TypeError(f"field must be a FieldDescriptor, got {type(field).__name__}")
            a_value = _to_fraction(a)
            b_value = _to_fraction(b)
            if field.degree == 1 and b_value != 0:
                raise ValueError("b must be 0 for elements of Q")
            self._a = a_value
            self._b = b_value
            self._field = field
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> constructing field element: {e}")
            raise QuadFieldConstructionError(
                f"Error '{e.__class__.__name__}' -> constructing field element: {e}"
            ) from e

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, field: FieldDescriptor) -> "FieldElement":
        """Unchecked constructor used by the arithmetic fast paths."""
        obj = object.__new__(FieldElement)
        obj._a = a
        obj._b = b
        obj._field = field
        return obj

    @staticmethod
    def from_doubled(x2: int, y2: int, field: FieldDescriptor) -> "FieldElement":
        """Builds (x2 + y2*sqrt(d)) / 2 from doubled integer coordinates."""
        return FieldElement._raw(Fraction(x2, 2), Fraction(y2, 2), field)

    # ------------
    # Properties

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def field(self) -> FieldDescriptor:
        return self._field

    # ------------
    # Magic Methods

    def __repr__(self) -> str:
        return f"FieldElement({format_element(self)!r}, field={self._field})"

    def __str__(self) -> str:
        return format_element(self)

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._field.d))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return (
                self._field == other._field
                and self._a == other._a
                and self._b == other._b
            )
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def _coerce(self, other: object) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other._field != self._field:
                raise QuadFieldMismatchError(
                    f"Operands live in different fields: {self._field} and {other._field}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FieldElement._raw(Fraction(other), Fraction(0), self._field)
        raise QuadFieldArithmeticError(
            f"Unsupported operand of type {type(other).__name__}"
        )

    def __neg__(self) -> "FieldElement":
        return FieldElement._raw(-self._a, -self._b, self._field)

    def __pos__(self) -> "FieldElement":
        return self

    def __add__(self, other: object) -> "FieldElement":
        y = self._coerce(other)
        return FieldElement._raw(self._a + y._a, self._b + y._b, self._field)

    __radd__ = __add__

    def __sub__(self, other: object) -> "FieldElement":
        y = self._coerce(other)
        return FieldElement._raw(self._a - y._a, self._b - y._b, self._field)

    def __rsub__(self, other: object) -> "FieldElement":
        return self._coerce(other) - self

    def __mul__(self, other: object) -> "FieldElement":
        y = self._coerce(other)
        if self._b == 0 and y._b == 0:
            return FieldElement._raw(self._a * y._a, Fraction(0), self._field)
        d = self._field.d
        return FieldElement._raw(
            self._a * y._a + d * self._b * y._b,
            self._a * y._b + self._b * y._a,
            self._field,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "FieldElement":
        y = self._coerce(other)
        return self * y.inverse()

    def __rtruediv__(self, other: object) -> "FieldElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "FieldElement":
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            raise QuadFieldArithmeticError("Exponent must be an integer")
        base = self if exponent >= 0 else self.inverse()
        result = FieldElement._raw(Fraction(1), Fraction(0), self._field)
        power = abs(exponent)
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __lt__(self, other: object) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: object) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: object) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: object) -> bool:
        return (self - other).sign() >= 0

    # ------------
    # Methods

    def conj(self) -> "FieldElement":
        """a - b*sqrt(d); the identity on Q."""
        return FieldElement._raw(self._a, -self._b, self._field)

    def galois_conj(self) -> "FieldElement":
        if self._field.degree != 2:
            raise QuadFieldDegreeError("Q has no nontrivial Galois conjugation")
        return self.conj()

    def norm(self) -> Fraction:
        if self._field.degree == 1:
            return self._a
        return self._a * self._a - self._field.d * self._b * self._b

    def trace(self) -> Fraction:
        if self._field.degree == 1:
            return self._a
        return 2 * self._a

    def inverse(self) -> "FieldElement":
        try:
            if not self:
                raise ZeroDivisionError("Division by the zero element")
            if self._field.degree == 1 or self._b == 0:
                return FieldElement._raw(1 / self._a, Fraction(0), self._field)
            n = self._a * self._a - self._field.d * self._b * self._b
            return FieldElement._raw(self._a / n, -self._b / n, self._field)
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> inverting field element: {e}")
            raise QuadFieldArithmeticError(
                f"Error '{e.__class__.__name__}' -> inverting field element: {e}"
            ) from e

    def is_integral(self) -> bool:
        """
        is_integral
        ===========
        Membership in the ring of integers. For d = 1 mod 4 the element must be
        (x + y*sqrt(d)) / 2 with x, y integers of equal parity.
        """
        if self._field.half_integral:
            x2, y2 = 2 * self._a, 2 * self._b
            if x2.denominator != 1 or y2.denominator != 1:
                return False
            return (x2.numerator - y2.numerator) % 2 == 0
        return self._a.denominator == 1 and self._b.denominator == 1

    def doubled(self) -> Tuple[int, int]:
        """Doubled integer coordinates (2a, 2b) of an integral element."""
        x2, y2 = 2 * self._a, 2 * self._b
        if x2.denominator != 1 or y2.denominator != 1:
            raise QuadFieldIntegralityError(f"{self} has no integral doubled coordinates")
        return x2.numerator, y2.numerator

    def height(self) -> int:
        """
        Largest absolute integer coordinate. Half-integral rings use the doubled
        coordinates (2a, 2b).
        """
        if not self.is_integral():
            raise QuadFieldIntegralityError(f"Height is only defined for integral elements, got {self}")
        if self._field.half_integral:
            x2, y2 = self.doubled()
            return max(abs(x2), abs(y2))
        return max(abs(self._a.numerator), abs(self._b.numerator))

    def is_real(self) -> bool:
        """True when the element is real under the chosen complex embedding."""
        return self._field.is_real or self._b == 0

    def sign(self) -> int:
        """Exact sign under the identity embedding; needs a real value."""
        if not self.is_real():
            raise QuadFieldDegreeError(f"{self} is not real, it has no sign")
        return _sign_of(self._a, self._b, self._field.d)

    def sigma_sign(self) -> int:
        """Exact sign under the nontrivial real embedding of a real quadratic field."""
        if self._field.degree != 2 or self._field.d < 0:
            raise QuadFieldDegreeError(f"{self._field} has no second real embedding")
        return _sign_of(self._a, -self._b, self._field.d)

    def sqrt_exact(self) -> Optional["FieldElement"]:
        """
        sqrt_exact
        ==========
        Returns r with r * r == self, or None when self is not a square in its
        field. Writing r = p + q*sqrt(d), p^2 solves z^2 - a z + d b^2 / 4 = 0,
        whose discriminant a^2 - d b^2 is the norm of self.
        """
        a, b, field = self._a, self._b, self._field
        if b == 0:
            root = _rational_sqrt(a)
            if root is not None:
                return FieldElement._raw(root, Fraction(0), field)
            if field.degree == 2:
                q = _rational_sqrt(a / field.d)
                if q is not None:
                    return FieldElement._raw(Fraction(0), q, field)
            return None
        n = _rational_sqrt(a * a - field.d * b * b)
        if n is None:
            return None
        for p_squared in ((a + n) / 2, (a - n) / 2):
            p = _rational_sqrt(p_squared)
            if p is None or p == 0:
                continue
            candidate = FieldElement._raw(p, b / (2 * p), field)
            if candidate * candidate == self:
                return candidate
        return None

    def to_mpf(self, dps: int = 30) -> mpmath.mpf:
        """Identity real embedding at ``dps`` digits."""
        if not self.is_real():
            raise QuadFieldDegreeError(f"{self} is not real")
        with mpmath.workdps(dps):
            value = mpmath.mpf(self._a.numerator) / self._a.denominator
            if self._b != 0:
                value += mpmath.mpf(self._b.numerator) / self._b.denominator * mpmath.sqrt(self._field.d)
            return +value

    def sigma_to_mpf(self, dps: int = 30) -> mpmath.mpf:
        """Nontrivial real embedding at ``dps`` digits."""
        return self.galois_conj().to_mpf(dps)

    def to_mpc(self, dps: int = 30) -> mpmath.mpc:
        with mpmath.workdps(dps):
            re_part = mpmath.mpf(self._a.numerator) / self._a.denominator
            if self._b == 0:
                return mpmath.mpc(re_part, 0)
            coeff = mpmath.mpf(self._b.numerator) / self._b.denominator
            if self._field.d > 0:
                return mpmath.mpc(re_part + coeff * mpmath.sqrt(self._field.d), 0)
            return mpmath.mpc(re_part, coeff * mpmath.sqrt(-self._field.d))

    def to_float(self) -> float:
        return float(self.to_mpf(30))

    def to_complex(self) -> complex:
        return complex(self.to_mpc(30))


class IntegerRingElement(FieldElement):
    """
    IntegerRingElement
    ==================
    A FieldElement verified at construction to lie in the ring of integers.
    Arithmetic between ring elements returns plain FieldElements; use
    ``IntegerRingElement.of`` to re-certify a result.
    """

    __slots__ = ()

    def __init__(
        self,
        a: Union[Rational, str] = 0,
        b: Union[Rational, str] = 0,
        field: FieldDescriptor = RATIONALS,
    ) -> None:
        super().__init__(a, b, field)
        if not self.is_integral():
            LOGGER.error(f"Error 'QuadFieldIntegralityError' -> {format_element(self)} is not integral in {field}")
            raise QuadFieldIntegralityError(f"{format_element(self)} is not integral in {field}")

    @staticmethod
    def of(x: FieldElement) -> "IntegerRingElement":
        """Certifies an existing element."""
        if isinstance(x, IntegerRingElement):
            return x
        if not isinstance(x, FieldElement):
            raise QuadFieldIntegralityError(f"Expected a FieldElement, got {type(x).__name__}")
        return IntegerRingElement(x.a, x.b, x.field)

    @staticmethod
    def from_doubled(x2: int, y2: int, field: FieldDescriptor) -> "IntegerRingElement":
        return IntegerRingElement(Fraction(x2, 2), Fraction(y2, 2), field)

# -------------------------------------------------------------------------------------------------
# Operations
# -------------------------------------------------------------------------------------------------

def field_arith(x: FieldElement, y: FieldElement, op: FieldOp) -> FieldElement:
    """
    field_arith
    ===========
    Exact binary arithmetic in a shared field.

    Arguments:
        x (FieldElement) :
            Left operand.
        y (FieldElement) :
            Right operand, nonzero for FieldOp.DIV.
        op (FieldOp) :
            add, sub, mul or div.

    Returns:
        out (FieldElement) :
            The exact result.

    Raises:
        QuadFieldMismatchError : operands in different fields.
        QuadFieldArithmeticError : division by zero or unknown operation.
    """
    if not isinstance(x, FieldElement) or not isinstance(y, FieldElement):
        raise QuadFieldArithmeticError("field_arith expects two FieldElements")
    if x.field != y.field:
        LOGGER.error(f"Error 'QuadFieldMismatchError' -> field_arith on {x.field} and {y.field}")
        raise QuadFieldMismatchError(f"Operands live in different fields: {x.field} and {y.field}")
    try:
        op = FieldOp(op)
        if op is FieldOp.ADD:
            return x + y
        if op is FieldOp.SUB:
            return x - y
        if op is FieldOp.MUL:
            return x * y
        return x / y
    except (QuadFieldArithmeticError, QuadFieldMismatchError):
        raise
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> field_arith({op}): {e}")
        raise QuadFieldArithmeticError(f"Error '{e.__class__.__name__}' -> field_arith({op}): {e}") from e


def galois_conj(x: FieldElement) -> FieldElement:
    """sigma(a + b*sqrt(d)) = a - b*sqrt(d); raises QuadFieldDegreeError on Q."""
    return x.galois_conj()


def element_norm(x: FieldElement) -> Fraction:
    """x * sigma(x) for degree 2, x itself for Q."""
    return x.norm()


def ideal_norm(alpha: FieldElement) -> int:
    """
    ideal_norm
    ==========
    |N(alpha)| as a nonnegative integer for a nonzero integral alpha.
    """
    try:
        if not alpha:
            raise ValueError("The zero ideal has no norm")
        if not alpha.is_integral():
            raise ValueError(f"{alpha} is not integral")
        value = abs(alpha.norm())
        if value.denominator != 1:
            raise ArithmeticError(f"Norm {value} of an integral element is not an integer")
        return value.numerator
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> computing ideal norm: {e}")
        raise QuadFieldNormError(f"Error '{e.__class__.__name__}' -> computing ideal norm: {e}") from e


def divides(alpha: FieldElement, x: FieldElement) -> bool:
    """True iff x / alpha lies in the ring of integers."""
    if not isinstance(alpha, FieldElement) or not alpha:
        LOGGER.error("Error 'QuadFieldDivisibilityError' -> divides called with a zero divisor")
        raise QuadFieldDivisibilityError("divides needs a nonzero divisor")
    if x.field != alpha.field:
        raise QuadFieldMismatchError(f"Operands live in different fields: {alpha.field} and {x.field}")
    return (x / alpha).is_integral()

# -------------------------------------------------------------------------------------------------
# Parsing / formatting
# -------------------------------------------------------------------------------------------------

def format_element(x: FieldElement) -> str:
    """
    Canonical string "a+b*sqrt(d)" with rationals as "p/q".
    Zero parts are dropped: "3", "2*sqrt(2)", "3-2*sqrt(2)".
    """
    a, b = x.a, x.b
    if b == 0:
        return str(a)
    d = x.field.d
    if a == 0:
        return f"{b}*sqrt({d})"
    sign = "+" if b > 0 else "-"
    return f"{a}{sign}{abs(b)}*sqrt({d})"


def parse_element(text: str, field: Optional[FieldDescriptor] = None) -> FieldElement:
    """
    parse_element
    =============
    Parses "a+b*sqrt(d)" (either part optional). When ``field`` is None the
    field is inferred: Q without a sqrt term, Q(sqrt(d)) otherwise.

    Raises:
        QuadFieldParseError : malformed text or a radicand that disagrees with ``field``.
    """
    try:
        if not isinstance(text, str):
            raise TypeError(f"Expected a string, got {type(text).__name__}")
        match = _ELEMENT_PATTERN.match(text)
        if match is None or not text.strip():
            raise ValueError(f"'{text}' is not of the form a+b*sqrt(d)")
        a_text, sign, b_text, d_text = match.group("a", "sign", "b", "d")
        if d_text is None:
            if a_text is None:
                raise ValueError(f"'{text}' is empty")
            target = field if field is not None else RATIONALS
            return FieldElement(Fraction(a_text), 0, target)
        if a_text is not None and sign is None:
            raise ValueError(f"'{text}' needs a sign between the rational part and the sqrt term")
        d = int(d_text)
        target = field if field is not None else FieldDescriptor.quadratic(d)
        if target.degree != 2 or target.d != d:
            raise ValueError(f"sqrt({d}) does not belong to {target}")
        b = Fraction(b_text) if b_text is not None else Fraction(1)
        if sign == "-":
            b = -b
        a = Fraction(a_text) if a_text is not None else Fraction(0)
        return FieldElement(a, b, target)
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> parsing field element '{text}': {e}")
        raise QuadFieldParseError(f"Error '{e.__class__.__name__}' -> parsing field element '{text}': {e}") from e


def parse_integer(text: str, field: Optional[FieldDescriptor] = None) -> IntegerRingElement:
    """Parses and certifies an element of the ring of integers."""
    return IntegerRingElement.of(parse_element(text, field))

# -------------------------------------------------------------------------------------------------
# Ring enumeration
# -------------------------------------------------------------------------------------------------

def ring_coordinates(field: FieldDescriptor, height: int) -> List[Tuple[int, int]]:
    """
    ring_coordinates
    ================
    Doubled coordinates (X, Y) of every ring integer (X + Y*sqrt(d)) / 2 of
    height at most ``height``, sorted by (X, Y).
    """
    if not isinstance(height, int) or height < 0:
        raise QuadFieldArithmeticError(f"Height must be a nonnegative integer, got {height}")
    span = range(-height, height + 1)
    if field.degree == 1:
        return [(2 * x, 0) for x in span]
    if field.half_integral:
        return [(x, y) for x in span for y in span if (x - y) % 2 == 0]
    return [(2 * x, 2 * y) for x in span for y in span]


def ring_elements(field: FieldDescriptor, height: int) -> List[IntegerRingElement]:
    """Ring integers of height at most ``height`` in the order of ``ring_coordinates``."""
    return [IntegerRingElement.from_doubled(x, y, field) for x, y in ring_coordinates(field, height)]


def disc_coordinates(field: FieldDescriptor, radius_squared: Rational) -> List[Tuple[int, int]]:
    """
    disc_coordinates
    ================
    Doubled coordinates of every ring integer x with |x|^2 <= radius_squared,
    for Q or an imaginary quadratic field, sorted by (Y, X).
    """
    bound = Fraction(radius_squared)
    if bound < 0:
        raise QuadFieldArithmeticError(f"Radius squared must be nonnegative, got {bound}")
    if field.degree == 2 and field.d > 0:
        raise QuadFieldDegreeError("A disc holds infinitely many integers of a real quadratic field")

    # doubled coordinates satisfy X^2 + |d| Y^2 <= 4 R^2
    bound4 = 4 * bound
    out: List[Tuple[int, int]] = []
    if field.degree == 1:
        x_max = math.isqrt(math.floor(bound))
        return [(2 * x, 0) for x in range(-x_max, x_max + 1)]

    abs_d = -field.d
    y_max = math.isqrt(math.floor(bound4 / abs_d))
    for y2 in range(-y_max, y_max + 1):
        if not field.half_integral and y2 % 2:
            continue
        x_max = math.isqrt(math.floor(bound4 - abs_d * y2 * y2))
        for x2 in range(-x_max, x_max + 1):
            if field.half_integral:
                if (x2 - y2) % 2:
                    continue
            elif x2 % 2:
                continue
            out.append((x2, y2))
    return out


def ring_elements_in_disc(field: FieldDescriptor, radius_squared: Rational) -> List[IntegerRingElement]:
    """Ring integers x with |x|^2 <= radius_squared, in the order of ``disc_coordinates``."""
    return [IntegerRingElement.from_doubled(x, y, field) for x, y in disc_coordinates(field, radius_squared)]


def torsion_units(field: FieldDescriptor) -> List[IntegerRingElement]:
    """
    torsion_units
    =============
    The roots of unity of the ring of integers: {+-1, +-i} for Q(i), the
    sixth roots of unity for Q(sqrt(-3)), {+-1} for every other field.
    """
    if not field.is_imaginary:
        return [IntegerRingElement(1, 0, field), IntegerRingElement(-1, 0, field)]
    units = [
        IntegerRingElement.from_doubled(x2, y2, field)
        for x2, y2 in disc_coordinates(field, 1)
        if x2 * x2 - field.d * y2 * y2 == 4
    ]
    return sorted(units, key=lambda u: (-u.a, -u.b))
