# -------------------------------------------------------------------------------------------------
# Imports
# -------------------------------------------------------------------------------------------------

from enum import Enum, IntEnum

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

# -------------------------------------------------------------------------------------------------
# Enums
# -------------------------------------------------------------------------------------------------

class FieldOp(StrEnum):
    """
    FieldOp
    =======
    The binary operations accepted by ``field_arith``.

    Attributes:
        ADD (str) :
            Addition.
        SUB (str) :
            Subtraction.
        MUL (str) :
            Multiplication.
        DIV (str) :
            Exact division (divisor must be nonzero).
    """
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"

class ElementType(StrEnum):
    """
    ElementType
    ===========
    Classification of an element of PSL(2, C) by its trace.

    Attributes:
        ELLIPTIC (str) :
            Real trace with |t| < 2.
        PARABOLIC (str) :
            Trace +-2 and not the identity.
        IDENTITY (str) :
            The identity matrix (only known when the matrix is available).
        PARABOLIC_OR_IDENTITY (str) :
            Trace +-2 when only the trace is known.
        LOXODROMIC (str) :
            Every other trace, including every non-real trace.
    """
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    IDENTITY = "identity"
    PARABOLIC_OR_IDENTITY = "parabolic_or_identity"
    LOXODROMIC = "loxodromic"

class ReportFormat(StrEnum):
    """
    ReportFormat
    ============
    Output formats for reports. The values double as file suffixes.
    """
    JSON = ".json"
    CSV = ".csv"
    YAML = ".yaml"

class ExitCode(IntEnum):
    """
    ExitCode
    ========
    Process exit codes of the ``jr-systole`` command.

    Attributes:
        SUCCESS (int) :
            Outputs were produced.
        PRECONDITION (int) :
            A precondition or usage contract was violated by the input.
        INVARIANT (int) :
            A guaranteed invariant failed, which signals a bug.
    """
    SUCCESS = 0
    PRECONDITION = 1
    INVARIANT = 2
