class ReportException(Exception):
    """Base class for all exceptions related to report emission and loading."""
    pass

class ReportConverterError(ReportException):
    """Raised when a report cannot be converted to the requested format."""
    pass

class ReportLoaderError(ReportException):
    """Raised when report bytes cannot be parsed back."""
    pass

class ReportEmitError(ReportException):
    """Raised when a report cannot be written."""
    pass
