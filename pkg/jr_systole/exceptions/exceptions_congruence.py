from jr_systole.exceptions.exceptions_invariants import InvariantViolation

class CongruenceException(Exception):
    """Base class for all exceptions related to congruence subgroups and bounds."""
    pass

class CongruenceLevelError(CongruenceException):
    """Raised when a congruence level is invalid (zero generator, tau not of order two)."""
    pass

class CongruenceMembershipError(CongruenceException):
    """Raised when a membership test gets a non-integral element or a missing tau."""
    pass

class CongruenceResidueError(CongruenceException):
    """Raised when a residue is requested for an element outside the subgroup."""
    pass

class CongruenceResidueViolation(CongruenceResidueError, InvariantViolation):
    """Raised when a real-part residue that must be integral is not."""
    pass

class CongruenceBoundError(CongruenceException):
    """Raised when a bound gets out-of-range inputs."""
    pass
