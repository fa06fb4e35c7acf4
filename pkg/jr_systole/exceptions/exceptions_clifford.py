class CliffordException(Exception):
    """Base class for all exceptions related to the Clifford algebra module."""
    pass

class CliffordFormError(CliffordException):
    """Raised when a diagonal form is invalid (zero coefficient, too many generators, wrong field)."""
    pass

class CliffordElementError(CliffordException):
    """Raised when a Clifford element cannot be constructed."""
    pass

class CliffordMaskError(CliffordException):
    """Raised when a subset mask falls outside the form dimension."""
    pass

class CliffordMismatchError(CliffordException):
    """Raised when operands are attached to different forms."""
    pass

class CliffordAdmissibilityError(CliffordException):
    """Raised when admissibility is asked for a form over an imaginary field."""
    pass

class CliffordSpinError(CliffordException):
    """Raised when a spin element is constructed from a non-spin Clifford element."""
    pass

class CliffordEmbeddingError(CliffordException):
    """Raised when an element cannot be embedded into a larger form."""
    pass

class CliffordSerializationError(CliffordException):
    """Raised when a Clifford element cannot be read from or written to JSON."""
    pass

class CliffordEnumerationError(CliffordException):
    """Raised when the quaternion-slice enumeration gets invalid arguments."""
    pass
