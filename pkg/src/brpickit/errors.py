"""Shared exception types."""


class BrpicError(Exception):
    """Base class for all errors raised by brpickit."""


class CapacityError(BrpicError):
    """An enumeration or construction exceeds the configured size bound."""


class DomainError(BrpicError):
    """Input is structurally well-formed but outside the operation's domain."""


class NotInvertibleError(DomainError):
    """A datum or matrix that was required to be invertible is not."""


class InputValidationError(BrpicError):
    """Malformed or inconsistent user input (CLI/JSON layer)."""
