"""Exception hierarchy for tubings.

Library functions raise these; the CLI maps every TubingError to exit code 2.
"""

from __future__ import annotations


class TubingError(Exception):
    """Base class for all errors raised by the tubings package."""


class InputError(TubingError, ValueError):
    """A value is malformed: out-of-range nodes, mismatched graphs, bad JSON."""


class PreconditionError(TubingError, ValueError):
    """A documented precondition of an operation does not hold."""


class CapExceededError(TubingError):
    """An enumeration or census request is larger than the library supports."""

    def __init__(self, what: str, requested: int, limit: int):
        super().__init__(f"{what}: requested {requested}, limit is {limit}")
        self.what = what
        self.requested = requested
        self.limit = limit
