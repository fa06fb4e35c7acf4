# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

import math
import random
import logging
import numpy as np

from typing import Any, Dict, List, Tuple

# Local
from jr_systole.config.setup_logger import setup_logger
from jr_systole.common.systole_enums import ElementType
from jr_systole.field.quad_field import FieldDescriptor, FieldElement, format_element
from jr_systole.clifford.clifford_algebra import (
    CliffordElement,
    DiagonalForm,
    basis_mul,
    cliff_mul,
    mask_indices,
    mask_label,
    star,
)
from jr_systole.kleinian.moebius import NormalizedTrace, classify
from jr_systole.kleinian.geodesics import arg_tan_relation, length_holonomy, trace_identity_sides
from jr_systole.exceptions.exceptions_kleinian import KleinianBranchError

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
# Clifford axioms
# -------------------------------------------------------------------------------------------------

def basis_mul_oracle(left: int, right: int, form: DiagonalForm) -> Tuple[FieldElement, int]:
    """
    Product of two basis blades by reducing the generator word: adjacent
    out-of-order generators swap with a sign, equal neighbours contract to
    their square.
    """
    word: List[int] = list(mask_indices(left)) + list(mask_indices(right))
    coeff = FieldElement(1, 0, form.field)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(word) - 1:
            if word[i] > word[i + 1]:
                word[i], word[i + 1] = word[i + 1], word[i]
                coeff = -coeff
                changed = True
            elif word[i] == word[i + 1]:
                coeff = coeff * form.square(word[i])
                del word[i:i + 2]
                changed = True
                continue
            i += 1
    mask = 0
    for index in word:
        mask |= 1 << index
    return coeff, mask


def random_element(form: DiagonalForm, rng: random.Random, terms: int = 4, bound: int = 3) -> CliffordElement:
    """A sparse element with up to ``terms`` blades and integer coordinates in [-bound, bound]."""
    values: Dict[int, FieldElement] = {}
    for _ in range(terms):
        mask = rng.randrange(form.full_mask + 1)
        b = rng.randint(-bound, bound) if form.field.degree == 2 else 0
        values[mask] = FieldElement(rng.randint(-bound, bound), b, form.field)
    return CliffordElement(form, values)


def check_clifford_axioms(form: DiagonalForm, samples: int = 1000, seed: int = 0) -> Dict[str, Any]:
    """
    check_clifford_axioms
    =====================
    Compares ``basis_mul`` with the word-reduction oracle on every pair of
    masks, then tests associativity and the anti-automorphism
    (xy)* = y* x* on ``samples`` seeded random triples.

    Returns:
        out (Dict[str, Any]) :
            Counts and the first failures; ``passed`` summarizes them.
    """
    rng = random.Random(seed)
    basis_failures: List[str] = []
    for left in range(form.full_mask + 1):
        for right in range(form.full_mask + 1):
            if basis_mul(left, right, form) != basis_mul_oracle(left, right, form):
                basis_failures.append(f"{mask_label(left)}*{mask_label(right)}")

    assoc_failures = 0
    star_failures = 0
    for _ in range(samples):
        x, y, z = (random_element(form, rng) for _ in range(3))
        if cliff_mul(cliff_mul(x, y), z) != cliff_mul(x, cliff_mul(y, z)):
            assoc_failures += 1
        if star(cliff_mul(x, y)) != cliff_mul(star(y), star(x)):
            star_failures += 1

    passed = not basis_failures and assoc_failures == 0 and star_failures == 0
    LOGGER.info(f"Clifford axioms over {form.field}, n={form.n}: passed={passed}")
    return {
        "field": str(form.field),
        "form": [format_element(c) for c in form.coefficients],
        "seed": seed,
        "basis_pairs": (form.full_mask + 1) ** 2,
        "basis_failures": basis_failures[:20],
        "samples": samples,
        "associativity_failures": assoc_failures,
        "star_failures": star_failures,
        "passed": passed,
    }

# -------------------------------------------------------------------------------------------------
# Trace identities
# -------------------------------------------------------------------------------------------------

def check_trace_identities(
    field: FieldDescriptor,
    samples: int = 1000,
    seed: int = 0,
    tolerance: float = 1e-12,
    bound: int = 50,
) -> Dict[str, Any]:
    """
    check_trace_identities
    ======================
    On seeded random loxodromic ring integers t, checks
    4 cosh(l/2) = |t - 2| + |t + 2| to relative ``tolerance``; on seeded
    random z with |z| > 1, checks the argument relation of z + 1/z. Branch
    points and angles with |cos Arg z| < 0.05 are skipped and counted.
    """
    rng = np.random.default_rng(seed)
    coords = rng.integers(-bound, bound + 1, size=(samples, 2))
    trace_checked = 0
    trace_worst = 0.0
    for a, b in coords:
        t = FieldElement(int(a), int(b) if field.degree == 2 else 0, field)
        trace = NormalizedTrace.of(t)
        if classify(trace) is not ElementType.LOXODROMIC:
            continue
        lhs, rhs = trace_identity_sides(trace, length_holonomy(trace).length)
        trace_worst = max(trace_worst, abs(lhs - rhs) / max(abs(lhs), abs(rhs)))
        trace_checked += 1

    moduli = 1.0 + rng.uniform(0.01, 9.0, size=samples)
    angles = rng.uniform(-math.pi, math.pi, size=samples)
    tan_checked = 0
    tan_skipped = 0
    tan_worst = 0.0
    for modulus, angle in zip(moduli, angles):
        # tan is ill-conditioned next to the vertical axis
        if abs(math.cos(angle)) < 0.05:
            tan_skipped += 1
            continue
        z = complex(modulus * math.cos(angle), modulus * math.sin(angle))
        try:
            lhs, rhs = arg_tan_relation(z)
        except KleinianBranchError:
            tan_skipped += 1
            continue
        tan_worst = max(tan_worst, abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs)))
        tan_checked += 1

    passed = trace_worst <= tolerance and tan_worst <= tolerance
    LOGGER.info(f"Trace identities over {field}: passed={passed}")
    return {
        "field": str(field),
        "seed": seed,
        "samples": samples,
        "trace_checked": trace_checked,
        "trace_max_rel_error": trace_worst,
        "tan_checked": tan_checked,
        "tan_skipped": tan_skipped,
        "tan_max_rel_error": tan_worst,
        "tol": tolerance,
        "passed": passed,
    }
