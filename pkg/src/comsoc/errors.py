"""Shared exception types."""


class CapacityError(Exception):
    """An instance exceeds the documented size limit of an exact solver."""


class ParseError(ValueError):
    """A text input is malformed. Carries a 1-based line number."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
