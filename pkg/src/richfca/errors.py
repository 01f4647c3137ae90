"""Exception hierarchy shared by every module."""


class RichFCAError(Exception):
    """Base class for all library errors."""


class ForeignSetError(RichFCAError, ValueError):
    """An object/attribute set was used with a context it does not belong to."""


class DomainError(RichFCAError, ValueError):
    """An operation was called outside the domain where it is defined."""


class CxtParseError(RichFCAError, ValueError):
    """A Burmeister file could not be parsed."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvariantViolation(RichFCAError, AssertionError):
    """A guarantee that the theory makes was observed to fail.

    Raised only when something that must hold did not; this signals a bug.
    """


class GuardError(RichFCAError, ValueError):
    """A requested enumeration is too large to run."""
