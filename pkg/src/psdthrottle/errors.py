"""Exception hierarchy shared by every module."""

from __future__ import annotations


class PSDThrottleError(Exception):
    """Base class for all package errors."""


class ParameterError(PSDThrottleError, ValueError):
    """A family parameter or argument is outside its valid range."""


class EdgeError(PSDThrottleError, ValueError):
    """An edge operation named an edge that is not in the graph."""


class DisconnectedError(PSDThrottleError, ValueError):
    """A radius-type quantity was requested on a disconnected graph."""


class UsageError(PSDThrottleError, ValueError):
    """An operation was applied to an object that does not support it."""


class PreconditionError(PSDThrottleError, ValueError):
    """An input violated a documented precondition."""


class SizeLimitError(PSDThrottleError):
    """An exhaustive search would exceed its configured size or budget."""


class UndefinedParameterError(PSDThrottleError, ValueError):
    """The requested parameter has no admissible candidates (e.g. th*(K_1))."""


class Graph6Error(PSDThrottleError, ValueError):
    """Malformed graph6 text.  ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
