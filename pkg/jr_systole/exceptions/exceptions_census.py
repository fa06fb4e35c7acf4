class CensusException(Exception):
    """Base class for all exceptions related to the trace census."""
    pass

class CensusQueryError(CensusException):
    """Raised when a census query is invalid."""
    pass

class CensusLatticeError(CensusException):
    """Raised when a lattice count gets a real field or a negative radius."""
    pass

class CensusPrimitiveError(CensusException):
    """Raised when the primitivity filter gets a non-loxodromic trace or max_k < 2."""
    pass

class CensusRunError(CensusException):
    """Raised when the census enumeration fails."""
    pass

class CensusReportError(CensusException):
    """Raised when a census report or record is inconsistent."""
    pass

class CensusGrowthError(CensusException):
    """Raised when a growth table gets a non-increasing norm list."""
    pass
