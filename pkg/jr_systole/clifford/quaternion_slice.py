# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import logging

from typing import List, Optional

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.clifford.clifford_algebra import (
    CliffordElement,
    DiagonalForm,
    SpinElement,
    mask_of,
)
from jr_systole.field.quad_field import (
    FieldElement,
    IntegerRingElement,
    divides,
    ring_elements,
)
from jr_systole.exceptions.exceptions_clifford import CliffordEnumerationError

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

E01: int = mask_of(0, 1)
E02: int = mask_of(0, 2)
E12: int = mask_of(1, 2)

# -------------------------------------------------------------------------------------------------
# Functions
# -------------------------------------------------------------------------------------------------

def slice_element(
    form: DiagonalForm,
    x0: FieldElement,
    x1: FieldElement,
    x2: FieldElement,
    x3: FieldElement,
) -> CliffordElement:
    """x0 + x1*e01 + x2*e02 + x3*e12 in the algebra of a three-generator form."""
    return CliffordElement(form, {0: x0, E01: x1, E02: x2, E12: x3})


def slice_norm(
    form: DiagonalForm,
    x0: FieldElement,
    x1: FieldElement,
    x2: FieldElement,
    x3: FieldElement,
) -> FieldElement:
    """s s* for s on the slice: x0^2 - a0 a1 x1^2 - a0 a2 x2^2 + a1 a2 x3^2."""
    a0, a1, a2 = form.coefficients
    return x0 * x0 - a0 * a1 * x1 * x1 - a0 * a2 * x2 * x2 + a1 * a2 * x3 * x3


def enumerate_quaternion_spin(
    form: DiagonalForm,
    height: int,
    level: Optional[FieldElement] = None,
) -> List[SpinElement]:
    """
    enumerate_quaternion_spin
    =========================
    Spin elements x0 + x1*e01 + x2*e02 + x3*e12 of a form with three generators,
    where x0, x1, x2 are ring integers of height at most ``height`` and x3 is
    the exact integral solution of the norm equation. With ``level`` only
    members of the principal congruence subgroup of that level are returned.

    Arguments:
        form (DiagonalForm) :
            Form with exactly three generators.
        height (int) :
            Height bound on x0, x1 and x2.
        level (Optional[FieldElement]) :
            Nonzero ring integer, or None for no congruence filter.

    Returns:
        out (List[SpinElement]) :
            Certified spin elements, sorted by coordinates.

    Raises:
        CliffordEnumerationError : wrong dimension, bad height or bad level.
    """
    try:
        if form.n != 2:
            raise ValueError(f"The quaternion slice needs three generators, the form has {form.n + 1}")
        if not isinstance(height, int) or height < 0:
            raise ValueError(f"Height must be a nonnegative integer, got {height}")
        if level is not None:
            level = IntegerRingElement.of(level)
            if not level:
                raise ValueError("The congruence level must be nonzero")
    except Exception as e:
        LOGGER.error(f"Error '{e.__class__.__name__}' -> enumerating quaternion slice: {e}")
        raise CliffordEnumerationError(
            f"Error '{e.__class__.__name__}' -> enumerating quaternion slice: {e}"
        ) from e

    a0, a1, a2 = form.coefficients
    a01, a02, a12 = a0 * a1, a0 * a2, a1 * a2
    candidates = ring_elements(form.field, height)
    if level is None:
        x0_values = pure_values = candidates
    else:
        x0_values = [x for x in candidates if divides(level, x - 1)]
        pure_values = [x for x in candidates if divides(level, x)]

    found: List[SpinElement] = []
    for x0 in x0_values:
        rest0 = 1 - x0 * x0
        for x1 in pure_values:
            rest1 = rest0 + a01 * x1 * x1
            for x2 in pure_values:
                x3_squared = (rest1 + a02 * x2 * x2) / a12
                x3 = x3_squared.sqrt_exact()
                if x3 is None or not x3.is_integral():
                    continue
                if level is not None and not divides(level, x3):
                    continue
                roots = [x3] if not x3 else [x3, -x3]
                for root in roots:
                    found.append(SpinElement(slice_element(form, x0, x1, x2, root)))

    found.sort(key=lambda s: tuple(s.element.coefficient(m).doubled() for m in (0, E01, E02, E12)))
    LOGGER.debug(f"Quaternion slice of {form!r} at height {height}: {len(found)} spin elements")
    return found
