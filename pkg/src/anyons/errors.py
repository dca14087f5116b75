"""Exception types shared across the package.

The CLI maps these onto process exit codes: bad input is 1, a blown
resource cap is 2, and a violated internal invariant (including numeric
non-convergence) is 3.
"""

from __future__ import annotations


class AnyonError(Exception):
    """Base class for all errors raised by this package."""


class InputError(AnyonError, ValueError):
    """Caller passed something malformed: unknown label, bad grammar, ..."""


class ResourceError(AnyonError):
    """A configurable cap (state count, matrix dimension, ...) was exceeded."""


class InvariantViolation(AnyonError):
    """An internal consistency assertion failed."""


class NumericError(InvariantViolation):
    """An iterative numeric procedure failed to converge."""


class CompletenessError(InputError):
    """A symbol table is missing an admissible entry; names the tuple."""


class BraidSyntaxError(InputError):
    """Braid-word text failed to parse.

    Attributes
    ----------
    offset : byte offset into the input where parsing failed.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
