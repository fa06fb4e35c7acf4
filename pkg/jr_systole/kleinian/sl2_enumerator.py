# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import logging

from concurrent.futures import ProcessPoolExecutor
from typing import Iterator, List, Optional, Sequence, Set, Tuple

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.field.quad_field import (
    FieldDescriptor,
    FieldElement,
    IntegerRingElement,
    ring_coordinates,
    ring_elements,
)
from jr_systole.kleinian.moebius import MoebiusElement
from jr_systole.exceptions.exceptions_kleinian import KleinianEnumerationError
from jr_systole.exceptions.exceptions_quad_field import QuadFieldIntegralityViolation

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

# ring integers as doubled coordinates (X, Y) = (2a, 2b) of a + b*sqrt(d)
Coord = Tuple[int, int]
Quad = Tuple[Coord, Coord, Coord, Coord]

# -------------------------------------------------------------------------------------------------
# Integer core
# -------------------------------------------------------------------------------------------------

class _RingCore:
    """
    Arithmetic on doubled coordinates of one ring of integers. Membership in
    the ring (and in a height ball) is a set lookup.
    """

    __slots__ = ("d", "half_integral", "rational")

    def __init__(self, field: FieldDescriptor) -> None:
        self.rational = field.degree == 1
        self.d = 0 if self.rational else field.d
        self.half_integral = field.half_integral

    def is_integral(self, x: int, y: int) -> bool:
        if self.rational:
            return y == 0 and x % 2 == 0
        if self.half_integral:
            return (x - y) % 2 == 0
        return x % 2 == 0 and y % 2 == 0

    def mul(self, p: Coord, q: Coord) -> Coord:
        """Doubled coordinates of p * q; both factors must be ring integers."""
        x = p[0] * q[0] + self.d * p[1] * q[1]
        y = p[0] * q[1] + p[1] * q[0]
        # the ring is closed under products, so both sums are even
        if x % 2 or y % 2 or not self.is_integral(x // 2, y // 2):
            LOGGER.error(f"Error 'QuadFieldIntegralityViolation' -> product of {p} and {q} left the ring")
            raise QuadFieldIntegralityViolation(f"Product of doubled coordinates {p} and {q} is not a ring integer")
        return x // 2, y // 2

    def norm4(self, p: Coord) -> int:
        """4 N(p)."""
        return p[0] * p[0] - self.d * p[1] * p[1]

    def div(self, p: Coord, q: Coord, q_norm4: int) -> Optional[Coord]:
        """p / q as doubled coordinates when the quotient is a ring integer."""
        x = 2 * (p[0] * q[0] - self.d * p[1] * q[1])
        y = 2 * (p[1] * q[0] - p[0] * q[1])
        if x % q_norm4 or y % q_norm4:
            return None
        x //= q_norm4
        y //= q_norm4
        return (x, y) if self.is_integral(x, y) else None

    def divides(self, level: Coord, level_norm4: int, p: Coord) -> bool:
        return self.div(p, level, level_norm4) is not None


def _level_coords(level: FieldElement, field: FieldDescriptor) -> Coord:
    try:
        level = IntegerRingElement.of(level)
        if level.field != field:
            raise ValueError(f"Level lives in {level.field}, expected {field}")
        if not level:
            raise ValueError("The level must be nonzero")
        return level.doubled()
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> reading enumeration level: {e}")
        raise KleinianEnumerationError(f"Error '{e.__class__.__name__}' -> reading enumeration level: {e}") from e


def _enumerate_chunk(
    field: FieldDescriptor,
    height: int,
    level: Optional[Coord],
    a_values: Sequence[Coord],
) -> List[Quad]:
    """Every (a, b, c, d) with a in ``a_values``; the unit of parallel work."""
    core = _RingCore(field)
    coords = ring_coordinates(field, height)
    allowed: Set[Coord] = set(coords)
    one: Coord = (2, 0)
    minus_one: Coord = (-2, 0)

    if level is None:
        pure = coords
        level_norm4 = 0
    else:
        level_norm4 = core.norm4(level)
        pure = [p for p in coords if core.divides(level, level_norm4, p)]

    def sign_mod_level(p: Coord) -> Optional[int]:
        for sign, unit in ((1, one), (-1, minus_one)):
            if core.divides(level, level_norm4, (p[0] - unit[0], p[1] - unit[1])):
                return sign
        return None

    units = [p for p in coords if core.norm4(p) == 4]
    out: List[Quad] = []
    for a in a_values:
        a_sign = None if level is None else sign_mod_level(a)
        if level is not None and a_sign is None:
            continue
        if a == (0, 0):
            # bc = -1 forces b to be a unit and c = -1/b; d is free
            for b in units:
                if b not in pure:
                    continue
                c = core.div(minus_one, b, 4)
                if c is None or c not in allowed or (level is not None and c not in pure):
                    continue
                for d in coords:
                    if level is not None and sign_mod_level(d) != a_sign:
                        continue
                    out.append((a, b, c, d))
            continue
        a_norm4 = core.norm4(a)
        for b in pure:
            for c in pure:
                bc = core.mul(b, c)
                d = core.div((bc[0] + 2, bc[1]), a, a_norm4)
                if d is None or d not in allowed:
                    continue
                if level is not None and sign_mod_level(d) != a_sign:
                    continue
                out.append((a, b, c, d))
    return out


def _to_moebius(field: FieldDescriptor, quad: Quad) -> MoebiusElement:
    a, b, c, d = (IntegerRingElement.from_doubled(x, y, field) for x, y in quad)
    return MoebiusElement._raw(a, b, c, d)


def partition(values: Sequence[Coord], workers: int) -> List[List[Coord]]:
    """Contiguous, ordered slices of ``values`` for ``workers`` processes."""
    workers = max(1, min(workers, len(values) or 1))
    size, extra = divmod(len(values), workers)
    chunks: List[List[Coord]] = []
    start = 0
    for index in range(workers):
        stop = start + size + (1 if index < extra else 0)
        chunks.append(list(values[start:stop]))
        start = stop
    return chunks

# -------------------------------------------------------------------------------------------------
# Public enumeration
# -------------------------------------------------------------------------------------------------

def enumerate_sl2_quads(
    field: FieldDescriptor,
    height: int,
    level: Optional[FieldElement] = None,
    workers: int = 1,
) -> List[Quad]:
    """
    Doubled coordinates of every matrix of height at most ``height`` and
    determinant 1 (optionally +-1 mod ``level``) in canonical order: a, b, c
    in ``ring_coordinates`` order.
    """
    if not (field.is_rational or field.is_imaginary):
        LOGGER.error(f"Error 'KleinianEnumerationError' -> enumerate_sl2 over {field}")
        raise KleinianEnumerationError(f"{field} is a real quadratic field")
    if isinstance(height, bool) or not isinstance(height, int) or height < 0:
        raise KleinianEnumerationError(f"Height must be a nonnegative integer, got {height}")
    if not isinstance(workers, int) or workers < 1:
        raise KleinianEnumerationError(f"Workers must be a positive integer, got {workers}")
    level_coords = None if level is None else _level_coords(level, field)

    a_values = ring_coordinates(field, height)
    if workers == 1:
        return _enumerate_chunk(field, height, level_coords, a_values)

    chunks = partition(a_values, workers)
    LOGGER.debug(f"Enumerating SL(2) over {field} at height {height} with {len(chunks)} workers")
    out: List[Quad] = []
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        futures = [pool.submit(_enumerate_chunk, field, height, level_coords, chunk) for chunk in chunks]
        for future in futures:
            out.extend(future.result())
    return out


def enumerate_sl2(
    field: FieldDescriptor,
    height: int,
    level: Optional[FieldElement] = None,
    workers: int = 1,
) -> Iterator[MoebiusElement]:
    """
    enumerate_sl2
    =============
    Every matrix [[a, b], [c, d]] with entries of height at most ``height`` and
    determinant 1. d is solved exactly as (1 + bc) / a; the stratum a = 0 uses
    bc = -1. With ``level`` only matrices congruent to +-1 mod the level are
    produced.

    Arguments:
        field (FieldDescriptor) :
            Q or an imaginary quadratic field.
        height (int) :
            Bound on every integer coordinate of every entry.
        level (Optional[FieldElement]) :
            Nonzero ring integer, or None.
        workers (int) :
            Processes sharing the outer loop; the order is the same for any value.

    Returns:
        out (Iterator[MoebiusElement]) :
            The matrices in canonical order.

    Raises:
        KleinianEnumerationError : real field, bad height, bad level.
    """
    for quad in enumerate_sl2_quads(field, height, level, workers):
        yield _to_moebius(field, quad)


def enumerate_congruence_ball(level: FieldElement, height: int) -> List[MoebiusElement]:
    """
    enumerate_congruence_ball
    =========================
    Elements 1 + t M of the principal congruence subgroup of level t, where
    M = [[x, y], [z, w]] has x, y, z of height at most ``height`` and
    w = (t y z - x) / (1 + t x) is solved exactly from det = 1.
    """
    try:
        t = IntegerRingElement.of(level)
        if not t:
            raise ValueError("The level must be nonzero")
        if not (t.field.is_rational or t.field.is_imaginary):
            raise ValueError(f"{t.field} is a real quadratic field")
        if isinstance(height, bool) or not isinstance(height, int) or height < 0:
            raise ValueError(f"Height must be a nonnegative integer, got {height}")
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> enumerating congruence ball: {e}")
        raise KleinianEnumerationError(f"Error '{e.__class__.__name__}' -> enumerating congruence ball: {e}") from e

    values = ring_elements(t.field, height)
    out: List[MoebiusElement] = []
    for x in values:
        denominator = 1 + t * x
        if not denominator:
            continue
        for y in values:
            ty = t * y
            for z in values:
                w = (ty * z - x) / denominator
                if not w.is_integral():
                    continue
                out.append(MoebiusElement._raw(1 + t * x, t * y, t * z, 1 + t * w))
    return out
