from jr_systole.exceptions.exceptions_invariants import InvariantViolation

class QuadFieldException(Exception):
    """Base class for all exceptions related to quadratic field arithmetic."""
    pass

class QuadFieldConstructionError(QuadFieldException):
    """Raised when a field descriptor or field element cannot be constructed."""
    pass

class QuadFieldMismatchError(QuadFieldException):
    """Raised when two operands live in different fields."""
    pass

class QuadFieldArithmeticError(QuadFieldException):
    """Raised when an arithmetic operation fails (division by zero, bad operand)."""
    pass

class QuadFieldDegreeError(QuadFieldException):
    """Raised when an operation needs a degree-2 field (or a real/imaginary one) and gets another."""
    pass

class QuadFieldParseError(QuadFieldException):
    """Raised when an element string cannot be parsed."""
    pass

class QuadFieldNormError(QuadFieldException):
    """Raised when a norm is requested for an invalid element (e.g. ideal norm of zero)."""
    pass

class QuadFieldDivisibilityError(QuadFieldException):
    """Raised when a divisibility test is requested with a zero divisor."""
    pass

class QuadFieldIntegralityError(QuadFieldException):
    """Raised when a value that must lie in the ring of integers does not."""
    pass

class QuadFieldIntegralityViolation(QuadFieldIntegralityError, InvariantViolation):
    """Raised when a value that must be integral is not (bug signal)."""
    pass
