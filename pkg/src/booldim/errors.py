"""Exception types shared across the package.

Input problems (bad files, mismatched sizes) raise ValueError subclasses;
resource problems (size caps, time budgets) raise CapacityError or
BudgetExceededError.  The CLI maps the two groups to exit codes 2 and 3.
"""

from __future__ import annotations


class BooldimError(Exception):
    """Base class for package-specific errors."""


class CapacityError(BooldimError):
    """Input exceeds a documented size cap of an exact search."""


class BudgetExceededError(BooldimError):
    """A sweep ran past its wall-clock budget; results are discarded."""


class FormatError(BooldimError, ValueError):
    """Malformed textual input.  ``offset`` is the failing byte, if known."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class NotATreeError(BooldimError, ValueError):
    """Graph handed to the tree machinery is not a tree."""
