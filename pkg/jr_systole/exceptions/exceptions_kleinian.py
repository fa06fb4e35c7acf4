from jr_systole.exceptions.exceptions_invariants import InvariantViolation

class KleinianException(Exception):
    """Base class for all exceptions related to Moebius elements and their geodesics."""
    pass

class KleinianConstructionError(KleinianException):
    """Raised when a Moebius element or a trace cannot be constructed."""
    pass

class KleinianDeterminantError(KleinianConstructionError):
    """Raised when ad - bc != 1."""
    pass

class KleinianClassificationError(KleinianException):
    """Raised when an operation gets an element of the wrong type (e.g. parabolic for an eigenvalue)."""
    pass

class KleinianBranchError(KleinianException):
    """Raised when the argument/tangent relation is asked outside its branch."""
    pass

class KleinianCongruenceError(KleinianException):
    """Raised when an element is not congruent to +-1 modulo the level."""
    pass

class KleinianTraceLevelViolation(KleinianException, InvariantViolation):
    """Raised when a congruence element has trace not congruent to +-2 modulo the squared level."""
    pass

class KleinianCertificationError(KleinianException):
    """Raised when a square-systole certificate is asked for an invalid trace."""
    pass

class KleinianEnumerationError(KleinianException):
    """Raised when the SL2 enumeration gets invalid arguments."""
    pass
