# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import math
import logging

import mpmath
import numpy as np

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple, Union

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.clifford.clifford_algebra import CliffordElement, SpinElement
from jr_systole.congruence.congruence_groups import CongruenceLevel, realpart_lower_bound
from jr_systole.field.quad_field import (
    FieldDescriptor,
    FieldElement,
    IntegerRingElement,
    format_element,
    ideal_norm,
)
from jr_systole.exceptions.exceptions_salem import (
    SalemConstructionError,
    SalemNotLoxodromicError,
    SalemPowerError,
    SalemRotationPowerViolation,
    SalemLevelViolation,
    SalemCertificationError,
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

ROTATION_POWERS: Tuple[int, ...] = (0, 1, 2)
SIGMA_LEVEL_RANGE: Tuple[int, int] = (1, 5)
# cos(2 k nu) must exceed this to count as covering nu
COVERING_MARGIN: float = 1e-12

# -------------------------------------------------------------------------------------------------
# CLasses
# -------------------------------------------------------------------------------------------------

class SalemQuartic:
    """
    SalemQuartic
    ============
    The unit lambda = t + u*sqrt(D) of the quadratic extension K(sqrt(D)) of a
    real quadratic field K, where t, u, D are ring integers of K with
    t^2 - u^2 D = 1, t > 1 and D > 0. Over a real quadratic K the second
    embedding must satisfy |sigma(t)| < 1, so that lambda is a Salem number
    of degree four. K = Q is accepted as a degenerate test field.

    Attributes:
        t (IntegerRingElement) :
            Half the trace lambda + 1/lambda.
        u (IntegerRingElement) :
            Coefficient of sqrt(D).
        D (IntegerRingElement) :
            Radicand of the extension.
    """

    __slots__ = (
        "_t",
        "_u",
        "_D",
    )

    _t: IntegerRingElement
    _u: IntegerRingElement
    _D: IntegerRingElement

    def __init__(
        self,
        t: FieldElement,
        u: Union[FieldElement, int] = 1,
        D: Optional[FieldElement] = None,
    ) -> None:
        try:
            t = IntegerRingElement.of(t)
            field = t.field
            if field.is_imaginary:
                raise ValueError(f"{field} is not a real field")
            if not isinstance(u, FieldElement):
                u = FieldElement(u, 0, field)
            u = IntegerRingElement.of(u)
            if D is None:
                if u != 1:
                    raise ValueError("D can only be omitted when u = 1")
                D = t * t - 1
            elif not isinstance(D, FieldElement):
                D = FieldElement(D, 0, field)
            D = IntegerRingElement.of(D)
            if u.field != field or D.field != field:
                raise ValueError("t, u and D must live in the same field")
            if t * t - u * u * D != 1:
                raise ValueError(f"t^2 - u^2 D = {format_element(t * t - u * u * D)}, expected 1")
            if D.sign() <= 0:
                raise ValueError(f"D = {format_element(D)} is not positive")
            if (t - 1).sign() <= 0:
                raise ValueError(f"t = {format_element(t)} is not greater than 1")
            if field.degree == 2 and not ((1 - t).sigma_sign() > 0 and (t + 1).sigma_sign() > 0):
                raise ValueError(f"|sigma(t)| < 1 fails for t = {format_element(t)}")
            self._t, self._u, self._D = t, u, D
        except Exception as e:
            LOGGER.error(f"Error '{e.__class__.__name__}' -> constructing Salem quartic: {e}")
            raise SalemConstructionError(
                f"Error '{e.__class__.__name__}' -> constructing Salem quartic: {e}"
            ) from e

    @property
    def t(self) -> IntegerRingElement:
        return self._t

    @property
    def u(self) -> IntegerRingElement:
        return self._u

    @property
    def D(self) -> IntegerRingElement:
        return self._D

    @property
    def field(self) -> FieldDescriptor:
        return self._t.field

    @property
    def degenerate(self) -> bool:
        """True over Q, where no second embedding exists."""
        return self.field.degree == 1

    def lam(self, dps: int = 30) -> mpmath.mpf:
        """lambda under the identity embedding."""
        with mpmath.workdps(dps):
            return self._t.to_mpf(dps) + self._u.to_mpf(dps) * mpmath.sqrt(self._D.to_mpf(dps))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SalemQuartic):
            return NotImplemented
        return (self._t, self._u, self._D) == (other._t, other._u, other._D)

    def __hash__(self) -> int:
        return hash((self._t, self._u, self._D))

    def __repr__(self) -> str:
        return (
            f"SalemQuartic(t={format_element(self._t)}, u={format_element(self._u)}, "
            f"D={format_element(self._D)}, field={self.field})"
        )


@dataclass(frozen=True, slots=True)
class SalemPower:
    """lambda^(n+1) = t + u*sqrt(D)."""
    n: int
    t: IntegerRingElement
    u: IntegerRingElement


@dataclass(frozen=True, slots=True)
class InequalityCheck:
    """
    InequalityCheck
    ===============
    One exactly decided inequality ``lhs >= rhs`` (or a range check). A
    skipped check has ``holds = None``.
    """
    name: str
    lhs: str
    rhs: str
    holds: Optional[bool]
    note: str = ""

    @property
    def skipped(self) -> bool:
        return self.holds is None

    def as_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "note": self.note,
        }


@dataclass(frozen=True, slots=True)
class LevelCertificate:
    """
    LevelCertificate
    ================
    The level alpha_l = 4 t_m^2 - 1 attached to the rotation power m, with
    l = 3(m+1) - 1, the real part t_l of lambda^(l+1), and every inequality
    that was checked. ``certified`` is only set by certify_surface_systole.
    """
    sq: SalemQuartic
    m: int
    l: int
    alpha: IntegerRingElement
    t_m: IntegerRingElement
    u_m: IntegerRingElement
    t_l: IntegerRingElement
    u_l: IntegerRingElement
    degree: int
    checks: Tuple[InequalityCheck, ...]
    certified: bool = False

    def to_level(self) -> CongruenceLevel:
        """The congruence level (alpha_l, tau = t_l)."""
        return CongruenceLevel(self.alpha, self.t_l)

    def as_dict(self) -> Dict[str, Any]:
        return {
            "field": str(self.sq.field),
            "t": format_element(self.sq.t),
            "u": format_element(self.sq.u),
            "D": format_element(self.sq.D),
            "m": self.m,
            "l": self.l,
            "alpha_l": format_element(self.alpha),
            "alpha_norm": ideal_norm(self.alpha),
            "t_m": format_element(self.t_m),
            "t_l": format_element(self.t_l),
            "u_l": format_element(self.u_l),
            "degree": self.degree,
            "checks": [check.as_dict() for check in self.checks],
            "certified": self.certified,
        }


@dataclass(frozen=True, slots=True)
class AngleScan:
    """Outcome of the numeric angle covering scan."""
    samples: int
    uncovered: Tuple[float, ...]
    min_margin: float

    @property
    def covered(self) -> bool:
        return not self.uncovered

# -------------------------------------------------------------------------------------------------
# Construction
# -------------------------------------------------------------------------------------------------

def salem_from_spin(s: Union[SpinElement, CliffordElement]) -> SalemQuartic:
    """
    salem_from_spin
    ===============
    (t, u, D) = (|s_R|, 1, s_R^2 - 1) for a loxodromic spin element. A
    negative real part is replaced by its absolute value, since s and -s
    act identically.

    Raises:
        SalemNotLoxodromicError : |s_R| <= 1.
        SalemConstructionError : the result violates the Salem conditions.
    """
    element = s.element if isinstance(s, SpinElement) else s
    real = element.real_part()
    if not real.is_real():
        raise SalemNotLoxodromicError(f"Real part {format_element(real)} is not real")
    if (real * real - 1).sign() <= 0:
        LOGGER.error(f"Error 'SalemNotLoxodromicError' -> s_R = {format_element(real)}")
        raise SalemNotLoxodromicError(f"|s_R| = |{format_element(real)}| <= 1, s is not loxodromic")
    t = real if real.sign() > 0 else -real
    return SalemQuartic(t, 1, t * t - 1)

# -------------------------------------------------------------------------------------------------
# Powers
# -------------------------------------------------------------------------------------------------

def _check_exponent(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        LOGGER.error(f"Error 'SalemPowerError' -> exponent {n}")
        raise SalemPowerError(f"Exponent must be a nonnegative integer, got {n}")


def salem_power_direct(sq: SalemQuartic, n: int) -> SalemPower:
    """lambda^(n+1) by repeated squaring of pairs (p, q) = p + q*sqrt(D)."""
    _check_exponent(n)
    D = sq.D
    result: Tuple[FieldElement, FieldElement] = (FieldElement(1, 0, sq.field), FieldElement(0, 0, sq.field))
    base: Tuple[FieldElement, FieldElement] = (sq.t, sq.u)
    power = n + 1
    while power:
        if power & 1:
            result = (result[0] * base[0] + result[1] * base[1] * D, result[0] * base[1] + result[1] * base[0])
        base = (base[0] * base[0] + base[1] * base[1] * D, 2 * base[0] * base[1])
        power >>= 1
    return SalemPower(n, IntegerRingElement.of(result[0]), IntegerRingElement.of(result[1]))


def salem_power(sq: SalemQuartic, n: int) -> SalemPower:
    """
    salem_power
    ===========
    (t_n, u_n) with lambda^(n+1) = t_n + u_n sqrt(D). For u = 1 the
    recurrence t_n = (x0^2 - 1) u_(n-1) + x0 t_(n-1), u_n = x0 u_(n-1) + t_(n-1)
    runs from (x0, 1); other inputs go through ``salem_power_direct``.
    """
    _check_exponent(n)
    if sq.u != 1:
        return salem_power_direct(sq, n)
    x0 = sq.t
    D = sq.D
    t_n, u_n = FieldElement(x0.a, x0.b, sq.field), FieldElement(1, 0, sq.field)
    for _ in range(n):
        t_n, u_n = D * u_n + x0 * t_n, x0 * u_n + t_n
    return SalemPower(n, IntegerRingElement.of(t_n), IntegerRingElement.of(u_n))


def salem_powers(sq: SalemQuartic, n_max: int) -> List[SalemPower]:
    """salem_power for n = 0..n_max in one pass."""
    return [salem_power(sq, n) for n in range(n_max + 1)]

# -------------------------------------------------------------------------------------------------
# Rotation power / level
# -------------------------------------------------------------------------------------------------

def _sigma_sign(x: FieldElement, degenerate: bool) -> int:
    """Sign under sigma; the identity stands in for sigma over Q."""
    return x.sign() if degenerate else x.sigma_sign()


def choose_rotation_power(sq: SalemQuartic) -> int:
    """
    choose_rotation_power
    =====================
    Smallest m in {0, 1, 2} with sigma(t_m)^2 > 1/2, decided exactly as the
    sign of sigma(2 t_m^2 - 1).

    Raises:
        SalemRotationPowerViolation : no m qualifies.
    """
    for m in ROTATION_POWERS:
        t_m = salem_power(sq, m).t
        if _sigma_sign(2 * t_m * t_m - 1, sq.degenerate) > 0:
            LOGGER.debug(f"Rotation power m={m} for {sq!r}")
            return m
    LOGGER.error(f"Error 'SalemRotationPowerViolation' -> no rotation power for {sq!r}")
    raise SalemRotationPowerViolation(f"No m in {ROTATION_POWERS} has sigma(t_m)^2 > 1/2 for {sq!r}")


def _sigma_range_check(alpha: FieldElement, degenerate: bool) -> InequalityCheck:
    lo, hi = SIGMA_LEVEL_RANGE
    if degenerate:
        return InequalityCheck(
            f"{lo} <= |sigma(alpha_l)| <= {hi}", format_element(alpha), f"[{lo}, {hi}]", None,
            "no second embedding over Q",
        )
    sign = alpha.sigma_sign()
    magnitude = alpha if sign >= 0 else -alpha
    holds = (magnitude - lo).sigma_sign() >= 0 and (magnitude - hi).sigma_sign() <= 0
    sigma_value = mpmath.nstr(alpha.sigma_to_mpf(30), 20)
    return InequalityCheck(f"{lo} <= |sigma(alpha_l)| <= {hi}", sigma_value, f"[{lo}, {hi}]", holds)


def level_from_salem(sq: SalemQuartic) -> LevelCertificate:
    """
    level_from_salem
    ================
    Picks m, sets l = 3(m+1) - 1 and alpha_l = 4 t_m^2 - 1, and records t_l.
    Two checks are recorded: the sqrt(D) coefficient identity u_l = alpha_l u_m
    and the range 1 <= |sigma(alpha_l)| <= 5 (skipped over Q).

    Raises:
        SalemRotationPowerViolation : from choose_rotation_power.
        SalemLevelViolation : a recorded check fails.
    """
    m = choose_rotation_power(sq)
    l = 3 * (m + 1) - 1
    power_m = salem_power(sq, m)
    power_l = salem_power(sq, l)
    alpha = IntegerRingElement.of(4 * power_m.t * power_m.t - 1)

    identity = InequalityCheck(
        "u_l == alpha_l * u_m",
        format_element(power_l.u),
        format_element(alpha * power_m.u),
        power_l.u == alpha * power_m.u,
    )
    sigma_range = _sigma_range_check(alpha, sq.degenerate)
    for check in (identity, sigma_range):
        if check.holds is False:
            LOGGER.error(f"Error 'SalemLevelViolation' -> {check.name} fails for {sq!r}")
            raise SalemLevelViolation(f"{check.name} fails: {check.lhs} vs {check.rhs}")

    return LevelCertificate(
        sq=sq,
        m=m,
        l=l,
        alpha=alpha,
        t_m=power_m.t,
        u_m=power_m.u,
        t_l=power_l.t,
        u_l=power_l.u,
        degree=sq.field.degree,
        checks=(identity, sigma_range),
    )


def certify_surface_systole(sq: SalemQuartic, degree: Optional[int] = None) -> LevelCertificate:
    """
    certify_surface_systole
    =======================
    Level certificate plus the two sufficient inequalities, both decided
    exactly in K with B = N(alpha_l)^2 / 2^(2d-1):

        (i)  B - 1 >= t_l      (every loxodromic element of Gamma(alpha_l))
        (ii) B >= 2 t_l        (the coset tau_l Gamma(alpha_l))

    Arguments:
        sq (SalemQuartic) :
            The Salem input.
        degree (Optional[int]) :
            d in the bound; defaults to the degree of K.

    Returns:
        out (LevelCertificate) :
            ``certified`` is True iff every non-skipped check holds.
    """
    degree = sq.field.degree if degree is None else degree
    if degree not in (1, 2):
        raise SalemCertificationError(f"Degree must be 1 or 2, got {degree}")
    base = level_from_salem(sq)
    field = sq.field
    try:
        bound = realpart_lower_bound(base.alpha, degree) + 1
        bound_element = FieldElement(bound, 0, field)
        first = InequalityCheck(
            "N(alpha_l)^2 / 2^(2d-1) - 1 >= t_l",
            str(bound - 1),
            format_element(base.t_l),
            (bound_element - 1 - base.t_l).sign() >= 0,
        )
        second = InequalityCheck(
            "N(alpha_l)^2 / 2^(2d-1) >= 2 t_l",
            str(bound),
            format_element(2 * base.t_l),
            (bound_element - 2 * base.t_l).sign() >= 0,
        )
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> certifying surface systole: {e}")
        raise SalemCertificationError(
            f"Error '{e.__class__.__name__}' -> certifying surface systole: {e}"
        ) from e

    checks = base.checks + (first, second)
    certified = all(check.holds for check in checks if not check.skipped)
    LOGGER.info(f"Surface systole certificate for {sq!r}: l={base.l}, certified={certified}")
    return LevelCertificate(
        sq=sq,
        m=base.m,
        l=base.l,
        alpha=base.alpha,
        t_m=base.t_m,
        u_m=base.u_m,
        t_l=base.t_l,
        u_l=base.u_l,
        degree=degree,
        checks=checks,
        certified=certified,
    )

# -------------------------------------------------------------------------------------------------
# Polynomial and numeric checks
# -------------------------------------------------------------------------------------------------

def salem_minimal_polynomial(sq: SalemQuartic) -> List[Fraction]:
    """
    Rational polynomial of lambda, highest degree first:
    x^4 - 2Tr(t) x^3 + (2 + 4N(t)) x^2 - 2Tr(t) x + 1 over a quadratic K,
    x^2 - 2t x + 1 over Q.
    """
    if sq.degenerate:
        return [Fraction(1), -2 * sq.t.a, Fraction(1)]
    trace = sq.t.trace()
    return [Fraction(1), -2 * trace, 2 + 4 * sq.t.norm(), -2 * trace, Fraction(1)]


def salem_conjugates(sq: SalemQuartic, dps: int = 30) -> List[mpmath.mpc]:
    """Roots of the minimal polynomial at ``dps`` digits, largest modulus first."""
    coefficients = salem_minimal_polynomial(sq)
    with mpmath.workdps(dps):
        roots = mpmath.polyroots(
            [mpmath.mpf(c.numerator) / c.denominator for c in coefficients],
            maxsteps=200,
            extraprec=2 * dps,
        )
        return sorted((mpmath.mpc(r) for r in roots), key=lambda r: -abs(r))


def is_salem_numeric(sq: SalemQuartic, dps: int = 30) -> bool:
    """Exactly one root outside, one inside and two on the unit circle."""
    if sq.degenerate:
        return False
    tol = mpmath.mpf(10) ** (-(dps // 2))
    with mpmath.workdps(dps):
        moduli = [abs(r) for r in salem_conjugates(sq, dps)]
        outside = sum(1 for r in moduli if r > 1 + tol)
        inside = sum(1 for r in moduli if r < 1 - tol)
        on_circle = sum(1 for r in moduli if abs(r - 1) <= tol)
    return outside == 1 and inside == 1 and on_circle == 2


def asymptotic_level_constant(m: int) -> int:
    """alpha_l ~ 2^(2m+2) t^(2(m+1)) for large t."""
    if m not in ROTATION_POWERS:
        raise SalemPowerError(f"m must be one of {ROTATION_POWERS}, got {m}")
    return 2 ** (2 * m + 2)


def excluded_angles() -> Tuple[float, ...]:
    """The angles in (0, pi) where cos(2 k nu) <= 0 for every k in {1, 2, 3}."""
    return (math.pi / 4, 3 * math.pi / 4)


def angle_covering_witness(nu: float) -> Optional[int]:
    """Smallest k in {1, 2, 3} with cos(2 k nu) > COVERING_MARGIN, or None."""
    for k in (1, 2, 3):
        if math.cos(2 * k * nu) > COVERING_MARGIN:
            return k
    return None


def angle_covering_scan(resolution: float = 1e-4) -> AngleScan:
    """
    angle_covering_scan
    ===================
    Evaluates cos(2k nu) for k = 1, 2, 3 on a grid of (0, pi) with step
    ``resolution``, skipping a half step around each excluded angle, and
    lists the grid points where no k gives a value above COVERING_MARGIN.
    """
    if resolution <= 0 or resolution >= 1:
        raise SalemPowerError(f"Resolution must lie in (0, 1), got {resolution}")
    grid = np.arange(resolution, math.pi, resolution)
    keep = np.ones_like(grid, dtype=bool)
    for angle in excluded_angles():
        keep &= np.abs(grid - angle) > resolution / 2
    grid = grid[keep]
    values = np.cos(2.0 * np.outer(np.array([1.0, 2.0, 3.0]), grid))
    best = values.max(axis=0)
    uncovered = tuple(float(nu) for nu in grid[best <= COVERING_MARGIN])
    return AngleScan(samples=int(grid.size), uncovered=uncovered, min_margin=float(best.min()))
