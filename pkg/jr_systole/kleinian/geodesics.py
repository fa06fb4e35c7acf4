# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import cmath
import math
import logging

import mpmath

from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple, Union

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.common.systole_enums import ElementType
from jr_systole.field.quad_field import FieldElement, IntegerRingElement, format_element, torsion_units
from jr_systole.kleinian.moebius import MoebiusElement, NormalizedTrace, classify
from jr_systole.kleinian.sl2_enumerator import enumerate_congruence_ball
from jr_systole.exceptions.exceptions_kleinian import (
    KleinianClassificationError,
    KleinianBranchError,
    KleinianCongruenceError,
    KleinianTraceLevelViolation,
    KleinianCertificationError,
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

TOLERANCE: float = 1e-12
ORACLE_DPS: int = 30

# holonomy gate width
EPSILON: float = 0.5 * math.atan(0.5)

TraceLike = Union[NormalizedTrace, FieldElement, complex, int, float]

# -------------------------------------------------------------------------------------------------
# Types
# -------------------------------------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class GeodesicInvariant:
    """
    GeodesicInvariant
    =================
    Length and holonomy of a loxodromic element.

    Attributes:
        length (float) :
            2 log|lambda|.
        holonomy (float) :
            2 Arg(lambda) with Arg in (-pi, pi].
        holonomy_reduced (float) :
            The holonomy reduced to [0, 2 pi).
        eigenvalue (complex) :
            The eigenvalue with |lambda| >= 1.
        kind (ElementType) :
            Always LOXODROMIC for values built by ``length_holonomy``.
    """
    length: float
    holonomy: float
    holonomy_reduced: float
    eigenvalue: complex
    kind: ElementType = ElementType.LOXODROMIC


@dataclass(frozen=True, slots=True)
class TraceResidue:
    """
    gamma = sign * 1 mod I, with residue (sign * tr - 2) / I^2.
    """
    sign: int
    trace: FieldElement
    residue: IntegerRingElement

    def as_dict(self) -> Dict[str, Any]:
        return {
            "sign": self.sign,
            "trace": format_element(self.trace),
            "residue": format_element(self.residue),
        }


@dataclass(frozen=True, slots=True)
class SquareSystoleParams:
    """
    SquareSystoleParams
    ===================
    N0 is the modulus beyond which the remainder bound 1 - N^-2 - 4 N^-1
    exceeds 3/4; L0 = 4 log N0 is the matching length gate. Either value can
    be overridden from the configuration.
    """
    n0: float = 2.0 * (4.0 + math.sqrt(17.0))
    l0: Optional[float] = None

    def __post_init__(self) -> None:
        if self.n0 <= 1:
            raise KleinianCertificationError(f"N0 must exceed 1, got {self.n0}")
        if self.l0 is None:
            object.__setattr__(self, "l0", 4.0 * math.log(self.n0))
        elif self.l0 <= 0:
            raise KleinianCertificationError(f"L0 must be positive, got {self.l0}")


@dataclass(frozen=True, slots=True)
class UnitCheck:
    """h_(P, zeta)(phi) for one torsion unit zeta."""
    zeta: str
    value: float
    expected: str
    holds: bool

    def as_dict(self) -> Dict[str, Any]:
        return {"zeta": self.zeta, "value": self.value, "expected": self.expected, "holds": self.holds}


@dataclass(frozen=True, slots=True)
class SquareSystoleCertificate:
    """
    SquareSystoleCertificate
    ========================
    Gates and unit checks for a trace t. ``certified`` means the square of an
    element of trace t realizes the systole of the congruence quotient of
    level t. ``remainder_corrected`` flags the |zeta R| > 3 sqrt(2) / 4
    reading of the remainder condition.
    """
    trace: str
    length: float
    holonomy: float
    holonomy_reduced: float
    n0: float
    l0: float
    epsilon: float
    length_gate: bool
    holonomy_gate: bool
    unit_checks: Tuple[UnitCheck, ...]
    certified: bool
    remainder_corrected: bool = True
    tolerance: float = TOLERANCE

    def as_dict(self) -> Dict[str, Any]:
        return {
            "trace": self.trace,
            "length": self.length,
            "holonomy": self.holonomy,
            "holonomy_reduced": self.holonomy_reduced,
            "N0": self.n0,
            "L0": self.l0,
            "epsilon": self.epsilon,
            "length_gate": self.length_gate,
            "holonomy_gate": self.holonomy_gate,
            "unit_checks": [check.as_dict() for check in self.unit_checks],
            "certified": self.certified,
            "remainder_corrected": self.remainder_corrected,
            "tol": self.tolerance,
        }


@dataclass(frozen=True, slots=True)
class BallCheck:
    """Minimum length over the loxodromic part of a congruence ball."""
    trace: str
    height: int
    checked: int
    min_length: Optional[float]
    bound: float
    holds: bool
    tolerance: float = 1e-9

    def as_dict(self) -> Dict[str, Any]:
        return {
            "trace": self.trace,
            "height": self.height,
            "checked": self.checked,
            "min_length": self.min_length,
            "bound": self.bound,
            "holds": self.holds,
            "tol": self.tolerance,
        }

# -------------------------------------------------------------------------------------------------
# Helpers
# -------------------------------------------------------------------------------------------------

def _as_complex_mp(t: TraceLike) -> mpmath.mpc:
    if isinstance(t, NormalizedTrace):
        return t.value.to_mpc(ORACLE_DPS)
    if isinstance(t, FieldElement):
        return t.to_mpc(ORACLE_DPS)
    if isinstance(t, (int, float, complex)) and not isinstance(t, bool):
        return mpmath.mpc(t)
    raise KleinianClassificationError(f"Cannot read a trace from {type(t).__name__}")


def _is_loxodromic(t: TraceLike) -> bool:
    if isinstance(t, (NormalizedTrace, FieldElement)):
        return classify(t) is ElementType.LOXODROMIC
    z = complex(t)
    if abs(z.imag) > 0:
        return True
    return abs(z.real) > 2


def _reduce_angle(theta: float) -> float:
    reduced = math.fmod(theta, 2 * math.pi)
    if reduced < 0:
        reduced += 2 * math.pi
    return 0.0 if reduced >= 2 * math.pi else reduced

# -------------------------------------------------------------------------------------------------
# Eigenvalues and invariants
# -------------------------------------------------------------------------------------------------

def eigenvalue_large(t: TraceLike) -> complex:
    """
    eigenvalue_large
    ================
    The root of x^2 - t x + 1 with |lambda| >= 1, computed at 30 digits. On the
    unit circle the root with positive imaginary part is returned.

    Raises:
        KleinianClassificationError : t = +-2.
    """
    if isinstance(t, (NormalizedTrace, FieldElement)):
        if classify(t) is ElementType.PARABOLIC_OR_IDENTITY:
            raise KleinianClassificationError(f"Trace {t} is parabolic")
    elif complex(t) in (2, -2):
        raise KleinianClassificationError(f"Trace {t} is parabolic")
    with mpmath.workdps(ORACLE_DPS):
        z = _as_complex_mp(t)
        root = mpmath.sqrt(z * z - 4)
        plus, minus = (z + root) / 2, (z - root) / 2
        if abs(abs(plus) - abs(minus)) > mpmath.mpf(10) ** (-(ORACLE_DPS - 5)):
            chosen = plus if abs(plus) > abs(minus) else minus
        else:
            chosen = plus if mpmath.im(plus) >= mpmath.im(minus) else minus
        return complex(chosen)


def length_holonomy(t: TraceLike) -> GeodesicInvariant:
    """
    length_holonomy
    ===============
    l = 2 log|lambda| and theta = 2 Arg(lambda), plus theta reduced to [0, 2 pi).

    Raises:
        KleinianClassificationError : t is not loxodromic.
    """
    if not _is_loxodromic(t):
        LOGGER.error(f"Error 'KleinianClassificationError' -> length_holonomy of non-loxodromic trace {t}")
        raise KleinianClassificationError(f"Trace {t} is not loxodromic")
    lam = eigenvalue_large(t)
    length = 2.0 * math.log(abs(lam))
    holonomy = 2.0 * cmath.phase(lam)
    return GeodesicInvariant(
        length=length,
        holonomy=holonomy,
        holonomy_reduced=_reduce_angle(holonomy),
        eigenvalue=lam,
    )


def trace_identity_sides(t: TraceLike, length: float) -> Tuple[float, float]:
    """(4 cosh(l/2), |t - 2| + |t + 2|)."""
    if length < 0:
        raise KleinianClassificationError(f"Length must be nonnegative, got {length}")
    z = complex(_as_complex_mp(t))
    return 4.0 * math.cosh(length / 2.0), abs(z - 2) + abs(z + 2)


def arg_tan_relation(z: complex) -> Tuple[float, float]:
    """
    arg_tan_relation
    ================
    Both sides of tan(Arg T(z)) = (|z| - 1/|z|) / (|z| + 1/|z|) tan(Arg z)
    with T(z) = z + 1/z.

    Raises:
        KleinianBranchError : |z| <= 1, |Arg z| = pi/2, or T(z) on (-inf, 0].
    """
    z = complex(z)
    modulus = abs(z)
    angle = cmath.phase(z)
    if modulus <= 1:
        raise KleinianBranchError(f"|z| = {modulus} must exceed 1")
    if abs(abs(angle) - math.pi / 2) <= TOLERANCE:
        raise KleinianBranchError("tan(Arg z) is undefined at |Arg z| = pi/2")
    tz = z + 1 / z
    if abs(tz.imag) <= TOLERANCE * (1 + abs(tz)) and tz.real <= 0:
        raise KleinianBranchError(f"T(z) = {tz} lies on the branch cut")
    lhs = math.tan(cmath.phase(tz))
    rhs = (modulus - 1 / modulus) / (modulus + 1 / modulus) * math.tan(angle)
    return lhs, rhs

# -------------------------------------------------------------------------------------------------
# Congruence traces
# -------------------------------------------------------------------------------------------------

def trace_mod_level(gamma: MoebiusElement, level: FieldElement) -> TraceResidue:
    """
    trace_mod_level
    ===============
    For gamma = +-1 mod I, certifies sign * tr(gamma) = 2 mod I^2 and
    returns the residue (sign * tr - 2) / I^2.

    Raises:
        KleinianCongruenceError : gamma is not +-1 mod I.
        KleinianTraceLevelViolation : the residue is not a ring integer.
    """
    sign = gamma.congruence_sign(level)
    if sign is None:
        LOGGER.error(f"Error 'KleinianCongruenceError' -> {gamma!r} is not +-1 mod {format_element(level)}")
        raise KleinianCongruenceError(f"{gamma!r} is not congruent to +-1 mod {format_element(level)}")
    trace = gamma.trace()
    residue = (sign * trace - 2) / (level * level)
    if not residue.is_integral():
        LOGGER.error(f"Error 'KleinianTraceLevelViolation' -> residue {format_element(residue)} of {gamma!r}")
        raise KleinianTraceLevelViolation(
            f"Trace {format_element(trace)} is not 2 mod {format_element(level)}^2"
        )
    return TraceResidue(sign, trace, IntegerRingElement.of(residue))

# -------------------------------------------------------------------------------------------------
# Square systole certification
# -------------------------------------------------------------------------------------------------

def h_function(P: float, zeta: complex, phi: float) -> float:
    """
    h_function
    ==========
    |P e^(i phi) + 2 + 4 zeta|^2 - |P e^(i phi) - 2|^2, evaluated directly and
    through the closed form 16(1 + Re zeta) + 8 P cos(phi) (1 + Re zeta + Im zeta tan(phi)),
    which holds for |zeta| = 1. Returns the closed form.

    Raises:
        KleinianCertificationError : invalid arguments or the two forms disagree.
    """
    zeta = complex(zeta)
    if P <= 1:
        raise KleinianCertificationError(f"P must exceed 1, got {P}")
    if not -math.pi / 2 < phi < math.pi / 2:
        raise KleinianCertificationError(f"phi must lie in (-pi/2, pi/2), got {phi}")
    if abs(abs(zeta) - 1) > TOLERANCE:
        raise KleinianCertificationError(f"zeta must be a unit, got |zeta| = {abs(zeta)}")
    w = P * cmath.exp(1j * phi)
    direct = abs(w + 2 + 4 * zeta) ** 2 - abs(w - 2) ** 2
    closed = 16 * (1 + zeta.real) + 8 * P * math.cos(phi) * (1 + zeta.real + zeta.imag * math.tan(phi))
    if abs(direct - closed) > TOLERANCE * (1 + P) ** 2 * 64:
        LOGGER.error(f"Error 'KleinianCertificationError' -> h forms disagree: {direct} vs {closed}")
        raise KleinianCertificationError(f"h forms disagree: {direct} vs {closed}")
    return closed


def holonomy_gate(theta: float) -> bool:
    """0 <= theta < 1/2 arctan(1/2)."""
    return 0.0 <= theta < EPSILON


def _unit_checks(t: NormalizedTrace) -> Tuple[UnitCheck, ...]:
    square = t.value * t.value - 2
    z = square.to_complex()
    P = abs(z)
    phi = cmath.phase(z)
    if P <= 1 or not -math.pi / 2 < phi < math.pi / 2:
        return ()
    scale = TOLERANCE * (1 + P) ** 2
    checks = []
    for unit in torsion_units(t.field):
        value = h_function(P, unit.to_complex(), phi)
        if unit == -1:
            checks.append(UnitCheck(format_element(unit), value, "= 0", abs(value) <= 64 * scale))
        else:
            checks.append(UnitCheck(format_element(unit), value, "> 0", value > scale))
    return tuple(checks)


def certify_square_systole(
    t: Union[NormalizedTrace, FieldElement],
    params: Optional[SquareSystoleParams] = None,
) -> SquareSystoleCertificate:
    """
    certify_square_systole
    ======================
    Certified when the length of t exceeds L0, its reduced holonomy passes
    ``holonomy_gate``, and h_(P, zeta) at P = |t^2 - 2|, phi = Arg(t^2 - 2)
    is positive for every torsion unit zeta != -1 (and zero at zeta = -1).

    Raises:
        KleinianClassificationError : t is not loxodromic.
        KleinianCertificationError : t is not integral.
    """
    params = params or SquareSystoleParams()
    trace = NormalizedTrace.of(t)
    if classify(trace) is not ElementType.LOXODROMIC:
        LOGGER.error(f"Error 'KleinianClassificationError' -> certify_square_systole({trace})")
        raise KleinianClassificationError(f"Trace {trace} is not loxodromic")
    if not trace.value.is_integral():
        LOGGER.error(f"Error 'KleinianCertificationError' -> trace {trace} is not integral")
        raise KleinianCertificationError(f"Trace {trace} is not a ring integer")

    invariant = length_holonomy(trace)
    length_gate = invariant.length > params.l0
    gate = holonomy_gate(invariant.holonomy_reduced)
    checks = _unit_checks(trace)
    certified = length_gate and gate and bool(checks) and all(c.holds for c in checks)
    LOGGER.debug(f"Square systole certificate for {trace}: certified={certified}")
    return SquareSystoleCertificate(
        trace=str(trace),
        length=invariant.length,
        holonomy=invariant.holonomy,
        holonomy_reduced=invariant.holonomy_reduced,
        n0=params.n0,
        l0=params.l0,
        epsilon=EPSILON,
        length_gate=length_gate,
        holonomy_gate=gate,
        unit_checks=checks,
        certified=certified,
    )


def square_systole_ball_check(
    t: Union[NormalizedTrace, FieldElement],
    height: int,
    tolerance: float = 1e-9,
) -> BallCheck:
    """
    Every loxodromic element of the congruence ball of level t (see
    ``enumerate_congruence_ball``) has length at least 2 l(t) - tolerance.
    """
    trace = NormalizedTrace.of(t)
    bound = 2.0 * length_holonomy(trace).length - tolerance
    lengths: Dict[str, float] = {}
    checked = 0
    for eta in enumerate_congruence_ball(trace.value, height):
        eta_trace = eta.normalized_trace()
        if classify(eta_trace) is not ElementType.LOXODROMIC:
            continue
        checked += 1
        key = str(eta_trace)
        if key not in lengths:
            lengths[key] = length_holonomy(eta_trace).length
    min_length = min(lengths.values()) if lengths else None
    holds = min_length is None or min_length >= bound
    return BallCheck(str(trace), height, checked, min_length, bound, holds, tolerance)
