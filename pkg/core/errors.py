from __future__ import annotations

from typing import List, Sequence, Tuple


class TreewaveError(Exception):
    """Base class for every error raised by treewave."""


class InvalidParameterError(TreewaveError, ValueError):
    """A precondition on the inputs of an operation does not hold."""


class VerificationError(TreewaveError):
    """A construction or design failed its own validator."""

    def __init__(self, message: str, violations: Sequence[Tuple[int, int]] = ()) -> None:
        super().__init__(message)
        self.violations: List[Tuple[int, int]] = list(violations)


class BudgetExhaustedError(TreewaveError):
    """Raised inside search routines when the wall-clock budget runs out."""
