"""Exception types shared across the package."""

from __future__ import annotations


class PathError(ValueError):
    """Rejected path text.  ``index`` is the 1-based step the scanner blames."""

    def __init__(self, message: str, index: int) -> None:
        super().__init__(f"{message} (step {index})")
        self.index = index


class IllegalCharacter(PathError):
    """Path text contains a character other than uppercase U or D."""


class Unbalanced(PathError):
    """Upstep and downstep counts differ; ``index`` is the text length."""


class DipsBelowZero(PathError):
    """Some prefix has more downsteps than upsteps."""


class CapExceeded(ValueError):
    """Requested semilength is above the enumeration cap."""


class EmptyRange(ValueError):
    """No path of the given semilength has the requested peak count."""


class OrdinalOutOfRange(ValueError):
    """Ordinal does not address an element of the requested class."""


class InexactDivision(ArithmeticError):
    """A division that must be exact left a remainder.  Always a bug."""


class InvalidPlan(ValueError):
    """Insertion plan has a negative entry or the wrong vector length."""


class PeakDeficit(ValueError):
    """Target peak count is below the base path's own peak count."""


class EmptySupport(ValueError):
    """No path satisfies the requested sampling parameters."""
