"""Error hierarchy shared by the services, management commands and views."""


class ComplexityError(Exception):
    """Base class for every error raised by the complexity services"""


class InvalidInputError(ComplexityError):
    """Input violates a precondition (empty sequence, bad symbol, mismatched tables)"""


class DecodeError(InvalidInputError):
    """Raw input could not be decoded into a sequence"""

    def __init__(self, message, offset=None, value=None):
        self.offset = offset
        self.value = value
        if offset is not None:
            message = f"{message} at offset {offset}"
            if value is not None:
                message = f"{message} (byte 0x{value:02x})"
        super().__init__(message)


class ResourceLimitError(ComplexityError):
    """Work would exceed a configured limit"""

    def __init__(self, message, limit=None):
        self.limit = limit
        super().__init__(message)


class DegenerateThresholdError(ComplexityError):
    """n / log_a(n) is not a usable threshold for this length"""


class TableUnavailableError(ComplexityError):
    """No count table exists for the requested (alphabet size, length)"""
