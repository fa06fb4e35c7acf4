# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import math
import logging

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.clifford.clifford_algebra import CliffordElement, SpinElement, cliff_mul
from jr_systole.field.quad_field import (
    FieldElement,
    IntegerRingElement,
    divides,
    format_element,
    ideal_norm,
)
from jr_systole.exceptions.exceptions_congruence import (
    CongruenceLevelError,
    CongruenceMembershipError,
    CongruenceResidueError,
    CongruenceResidueViolation,
    CongruenceBoundError,
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

LENGTH_TOLERANCE: float = 1e-12

Real = Union[int, Fraction, float, FieldElement]
Spinor = Union[SpinElement, CliffordElement]

# -------------------------------------------------------------------------------------------------
# Types
# -------------------------------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class CongruenceLevel:
    """
    CongruenceLevel
    ===============
    The level alpha of a principal congruence subgroup and, optionally, a
    representative tau of an order-two class modulo alpha.

    Attributes:
        alpha (IntegerRingElement) :
            Nonzero ring integer generating the level ideal.
        tau_rep (Optional[IntegerRingElement]) :
            Representative with tau^2 = 1 mod alpha, or None.
    """
    alpha: IntegerRingElement
    tau_rep: Optional[IntegerRingElement] = None

    def __post_init__(self) -> None:
        try:
            alpha = IntegerRingElement.of(self.alpha)
            if not alpha:
                raise ValueError("The level must be nonzero")
            object.__setattr__(self, "alpha", alpha)
            if self.tau_rep is not None:
                tau = IntegerRingElement.of(self.tau_rep)
                if tau.field != alpha.field:
                    raise ValueError(f"tau lives in {tau.field}, alpha in {alpha.field}")
                if not divides(alpha, tau * tau - 1):
                    raise ValueError(f"tau = {format_element(tau)} does not square to 1 mod {format_element(alpha)}")
                object.__setattr__(self, "tau_rep", tau)
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> building congruence level: {e}")
            raise CongruenceLevelError(
                f"Error '{e.__class__.__name__}' -> building congruence level: {e}"
            ) from e

    @property
    def norm(self) -> int:
        return ideal_norm(self.alpha)


@dataclass(frozen=True, slots=True)
class BoundReport:
    """
    BoundReport
    ===========
    A bound value together with the inputs it came from. Exact bounds carry
    ``tolerance = None``; floating bounds carry the comparison tolerance.
    """
    name: str
    value: Union[int, Fraction, float]
    inputs: Dict[str, Any] = field(default_factory=dict)
    certified: bool = True
    tolerance: Optional[float] = None

    def as_dict(self) -> Dict[str, Any]:
        value = self.value if isinstance(self.value, (int, float)) else str(self.value)
        out: Dict[str, Any] = {
            "name": self.name,
            "value": value,
            "inputs": {k: str(v) for k, v in self.inputs.items()},
            "certified": self.certified,
        }
        if self.tolerance is not None:
            out["tol"] = self.tolerance
        return out

# -------------------------------------------------------------------------------------------------
# Membership
# -------------------------------------------------------------------------------------------------

def _element(s: Spinor) -> CliffordElement:
    element = s.element if isinstance(s, SpinElement) else s
    if not isinstance(element, CliffordElement):
        raise CongruenceMembershipError(f"Expected a spin element, got {type(s).__name__}")
    if not element.is_integral():
        LOGGER.error(f"Error 'CongruenceMembershipError' -> {element} has non-integral coefficients")
        raise CongruenceMembershipError(f"{element} does not lie in the order: non-integral coefficients")
    return element


def _check_alpha(alpha: FieldElement, element: CliffordElement) -> IntegerRingElement:
    try:
        alpha = IntegerRingElement.of(alpha)
    except Exception as e:
        raise CongruenceLevelError(f"Level {alpha} is not a ring integer") from e
    if not alpha:
        raise CongruenceLevelError("The level must be nonzero")
    if alpha.field != element.form.field:
        raise CongruenceLevelError(f"Level lives in {alpha.field}, element in {element.form.field}")
    return alpha


def _pure_part_divisible(element: CliffordElement, alpha: FieldElement) -> bool:
    return all(divides(alpha, coeff) for mask, coeff in element.terms if mask)


def in_gamma_alpha(s: Spinor, alpha: FieldElement) -> bool:
    """
    in_gamma_alpha
    ==============
    Every non-scalar coefficient lies in (alpha) and the real part is 1 mod alpha.

    Raises:
        CongruenceMembershipError : s has non-integral coefficients.
        CongruenceLevelError : alpha is zero, non-integral or in another field.
    """
    element = _element(s)
    alpha = _check_alpha(alpha, element)
    return _pure_part_divisible(element, alpha) and divides(alpha, element.real_part() - 1)


def in_gamma_tau_alpha(s: Spinor, level: CongruenceLevel) -> bool:
    """Membership in Gamma(alpha) extended by the class s = tau mod alpha."""
    if not isinstance(level, CongruenceLevel) or level.tau_rep is None:
        LOGGER.error("Error 'CongruenceMembershipError' -> in_gamma_tau_alpha without tau")
        raise CongruenceMembershipError("in_gamma_tau_alpha needs a level with a tau representative")
    element = _element(s)
    alpha = _check_alpha(level.alpha, element)
    if not _pure_part_divisible(element, alpha):
        return False
    real = element.real_part()
    return divides(alpha, real - 1) or divides(alpha, real - level.tau_rep)

# -------------------------------------------------------------------------------------------------
# Real part residues
# -------------------------------------------------------------------------------------------------

def _residue(value: FieldElement, alpha: FieldElement, what: str) -> IntegerRingElement:
    zeta = 2 * value / (alpha * alpha)
    if not zeta.is_integral():
        LOGGER.error(f"Error 'CongruenceResidueViolation' -> {what}: {format_element(zeta)} is not integral")
        raise CongruenceResidueViolation(
            f"{what}: residue {format_element(zeta)} is not a ring integer"
        )
    return IntegerRingElement.of(zeta)


def realpart_residue(s: Spinor, alpha: FieldElement) -> IntegerRingElement:
    """
    realpart_residue
    ================
    zeta = 2 (s_R - 1) / alpha^2 for s in Gamma(alpha). zeta is always a ring
    integer; a fractional value is reported as CongruenceResidueViolation.

    Raises:
        CongruenceResidueError : s is not in Gamma(alpha).
        CongruenceResidueViolation : zeta is not integral.
    """
    if not in_gamma_alpha(s, alpha):
        LOGGER.error(f"Error 'CongruenceResidueError' -> realpart_residue outside Gamma({alpha})")
        raise CongruenceResidueError(f"Element is not in Gamma({format_element(alpha)})")
    element = _element(s)
    return _residue(element.real_part() - 1, alpha, "realpart_residue")


def realpart_residue_shifted(s: Spinor, r: Spinor, alpha: FieldElement) -> IntegerRingElement:
    """
    zeta = 2 ((s r)_R - s_R) / alpha^2 for r in Gamma(alpha) and s whose
    non-scalar coefficients lie in (alpha).
    """
    s_element = _element(s)
    r_element = _element(r)
    alpha = _check_alpha(alpha, s_element)
    if not in_gamma_alpha(r_element, alpha):
        raise CongruenceResidueError(f"r is not in Gamma({format_element(alpha)})")
    if not _pure_part_divisible(s_element, alpha):
        raise CongruenceResidueError(f"s - s_R is not in {format_element(alpha)} times the order")
    product = cliff_mul(s_element, r_element)
    return _residue(product.real_part() - s_element.real_part(), alpha, "realpart_residue_shifted")

# -------------------------------------------------------------------------------------------------
# Bounds
# -------------------------------------------------------------------------------------------------

def _norm_term(alpha: FieldElement, degree: int) -> Fraction:
    if degree not in (1, 2):
        raise CongruenceBoundError(f"Degree must be 1 or 2, got {degree}")
    try:
        norm = ideal_norm(alpha)
    except Exception as e:
        raise CongruenceBoundError(f"Error '{e.__class__.__name__}' -> norm of the level: {e}") from e
    return Fraction(norm * norm, 2 ** (2 * degree - 1))


def realpart_lower_bound(alpha: FieldElement, degree: int) -> Fraction:
    """N(alpha)^2 / 2^(2d-1) - 1, exact."""
    return _norm_term(alpha, degree) - 1


def shifted_lower_bound(alpha: FieldElement, s_abs: Real, degree: int) -> Union[Fraction, float]:
    """
    N(alpha)^2 / 2^(2d-1) - |s_R|. Exact when ``s_abs`` is rational, a float
    otherwise.
    """
    term = _norm_term(alpha, degree)
    if isinstance(s_abs, FieldElement):
        if s_abs.b == 0:
            s_abs = s_abs.a
        else:
            s_abs = s_abs.to_float()
    if isinstance(s_abs, bool) or not isinstance(s_abs, (int, Fraction, float)):
        raise CongruenceBoundError(f"s_abs must be a number, got {type(s_abs).__name__}")
    if s_abs < 0:
        raise CongruenceBoundError(f"s_abs must be nonnegative, got {s_abs}")
    if isinstance(s_abs, float):
        return float(term) - s_abs
    return term - s_abs


def length_lower_bound(r_abs: Real) -> float:
    """
    length_lower_bound
    ==================
    2 arcosh(|r_R|) when |r_R| > 1, and 0 otherwise. The comparison with 1 is
    exact for rational and field inputs.
    """
    if isinstance(r_abs, FieldElement):
        if r_abs.sign() < 0:
            raise CongruenceBoundError(f"r_abs must be nonnegative, got {r_abs}")
        if (r_abs - 1).sign() <= 0:
            return 0.0
        return 2.0 * math.acosh(r_abs.to_float())
    if isinstance(r_abs, bool) or not isinstance(r_abs, (int, Fraction, float)):
        raise CongruenceBoundError(f"r_abs must be a number, got {type(r_abs).__name__}")
    if r_abs < 0:
        raise CongruenceBoundError(f"r_abs must be nonnegative, got {r_abs}")
    if r_abs <= 1:
        return 0.0
    return 2.0 * math.acosh(float(r_abs))


def index_upper_bound(alpha: FieldElement, n: int) -> int:
    """N(alpha)^(n(n+1)/2)."""
    if not isinstance(n, int) or n < 2:
        raise CongruenceBoundError(f"Dimension must be an integer >= 2, got {n}")
    try:
        norm = ideal_norm(alpha)
    except Exception as e:
        raise CongruenceBoundError(f"Error '{e.__class__.__name__}' -> norm of the level: {e}") from e
    return norm ** (n * (n + 1) // 2)


def kissing_lower_bound(num_systole_classes: int, group_order: int, isotropy_cap: int) -> int:
    """Disjoint orbits of size at least |G| / cap: floor(classes * |G| / cap)."""
    for name, value in (
        ("num_systole_classes", num_systole_classes),
        ("group_order", group_order),
        ("isotropy_cap", isotropy_cap),
    ):
        if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
            LOGGER.error(f"Error 'CongruenceBoundError' -> kissing_lower_bound with {name}={value}")
            raise CongruenceBoundError(f"{name} must be a positive integer, got {value}")
    return num_systole_classes * group_order // isotropy_cap


def bound_reports(
    alpha: FieldElement,
    degree: int,
    n: int = 2,
    s_abs: Real = 0,
) -> List[BoundReport]:
    """Every bound attached to a level, as reports for printing or emitting."""
    inputs = {"alpha": format_element(alpha), "degree": degree}
    real_bound = realpart_lower_bound(alpha, degree)
    return [
        BoundReport("realpart_lower_bound", real_bound, dict(inputs)),
        BoundReport("shifted_lower_bound", shifted_lower_bound(alpha, s_abs, degree), {**inputs, "s_abs": s_abs}),
        BoundReport(
            "length_lower_bound",
            length_lower_bound(max(real_bound, Fraction(0))),
            {"r_abs": real_bound},
            tolerance=LENGTH_TOLERANCE,
        ),
        BoundReport("index_upper_bound", index_upper_bound(alpha, n), {**inputs, "n": n}),
    ]
