"""Exception hierarchy shared by the library and the command line."""

from typing import Any


class SwabcError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(SwabcError, ValueError):
    """An argument violates an operation's precondition."""


class BudgetExhaustedError(SwabcError):
    """A simulation or time budget ran out before the sampler finished.

    The partial result gathered so far travels with the exception.
    """

    def __init__(self, message: str, partial: Any = None) -> None:
        super().__init__(message)
        self.partial = partial


class PgmParseError(SwabcError, ValueError):
    """Malformed or unsupported PGM file."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class InternalError(SwabcError):
    """A numerical state the algorithm cannot recover from."""

    def __init__(self, message: str, dump: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.dump = dump or {}


class UsageError(SwabcError):
    """Invalid command-line usage."""
