"""
jr_systole
=================
Exact arithmetic and certification tools for short geodesics (systoles) of
arithmetic hyperbolic manifolds built from Clifford algebras over quadratic
fields.

Some Features:
---------

- Exact arithmetic in Q and quadratic fields, with rings of integers.
- Clifford algebras of diagonal forms, spin checks and congruence subgroups.
- Salem quartic levels with exactly decided surface-systole certificates.
- Lengths, holonomies and square-systole certificates for PSL(2) traces.
- Trace censuses and growth tables over imaginary quadratic fields.

Classes:
---------

- FieldDescriptor / FieldElement: Q(sqrt(d)) and its elements.
- DiagonalForm / CliffordElement / SpinElement: the Clifford algebra layer.
- CongruenceLevel: a level alpha with an optional order-two class tau.
- SalemQuartic: the unit lambda = t + u sqrt(D).
- MoebiusElement / NormalizedTrace: elements of SL(2) and their traces.
- CensusQuery / CensusReport: trace census input and output.
- SystoleConfig: validated run configuration.
"""

from jr_systole.field.quad_field import FieldDescriptor, FieldElement, IntegerRingElement
from jr_systole.clifford.clifford_algebra import DiagonalForm, CliffordElement, SpinElement
from jr_systole.congruence.congruence_groups import CongruenceLevel
from jr_systole.salem.salem_quartic import SalemQuartic, LevelCertificate
from jr_systole.kleinian.moebius import MoebiusElement, NormalizedTrace
from jr_systole.census.census_report import CensusQuery, CensusReport
from jr_systole.config.systole_config import SystoleConfig
from jr_systole.common.systole_enums import ElementType, ReportFormat, ExitCode

__all__ = [
    "FieldDescriptor",
    "FieldElement",
    "IntegerRingElement",
    "DiagonalForm",
    "CliffordElement",
    "SpinElement",
    "CongruenceLevel",
    "SalemQuartic",
    "LevelCertificate",
    "MoebiusElement",
    "NormalizedTrace",
    "CensusQuery",
    "CensusReport",
    "SystoleConfig",
    "ElementType",
    "ReportFormat",
    "ExitCode",
]

__name__ = "jr_systole"
__version__ = "0.1.0"
