class SystoleConfigException(Exception):
    """Base class for all exceptions related to the configuration."""
    pass

class SystoleConfigValueError(SystoleConfigException):
    """Raised when a configuration value is out of range or of the wrong type."""
    pass

class SystoleConfigLoadError(SystoleConfigException):
    """Raised when a configuration file cannot be loaded."""
    pass
