class CliException(Exception):
    """Base class for all exceptions related to the command line frontend."""
    pass

class CliUsageError(CliException):
    """Raised on unknown subcommands or malformed arguments."""
    pass

class CliInputError(CliException):
    """Raised when an input file cannot be read."""
    pass
