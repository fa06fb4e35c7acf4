from jr_systole.exceptions.exceptions_invariants import InvariantViolation

class SalemException(Exception):
    """Base class for all exceptions related to Salem quartics."""
    pass

class SalemConstructionError(SalemException):
    """Raised when (t, u, D) does not describe a valid Salem quartic."""
    pass

class SalemNotLoxodromicError(SalemException):
    """Raised when a spin element has |real part| <= 1."""
    pass

class SalemPowerError(SalemException):
    """Raised when a power of a Salem quartic cannot be computed."""
    pass

class SalemRotationPowerViolation(SalemException, InvariantViolation):
    """Raised when no m in {0, 1, 2} satisfies the rotation condition."""
    pass

class SalemLevelViolation(SalemException, InvariantViolation):
    """Raised when the chosen level violates 1 <= |sigma(alpha)| <= 5 or the coefficient identity."""
    pass

class SalemCertificationError(SalemException):
    """Raised when certification gets an invalid degree."""
    pass
