"""Exception types shared across the package."""


class SupclifError(Exception):
    """Base class for domain errors raised by this package."""


class ParseError(SupclifError):
    """Malformed textual input. `position` is a character offset when known."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class NotNaturalError(SupclifError):
    """A supernatural number was used where a positive integer is required."""


class ChainNotDivisibleError(SupclifError):
    """A size chain violates consecutive divisibility."""


class LevelMismatchError(SupclifError):
    """Operands live over different cyclotomic levels."""


class TruncationTooLargeError(SupclifError):
    """A finite truncation exceeds the exact-solver dimension guard."""


class DimensionMismatchError(SupclifError):
    """Matrix shapes are incompatible for the requested operation."""


class UnmappedIndexError(SupclifError):
    """An element mentions a generator the representation does not cover."""
