class InvariantViolation(Exception):
    """
    Marker mixed into every error that signals a broken mathematical guarantee
    (an implementation bug or an input that slipped past its preconditions).
    The CLI maps it to exit code 2.
    """
    pass
