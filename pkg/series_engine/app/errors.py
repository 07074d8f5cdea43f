"""Exception hierarchy of the series engine."""

from __future__ import annotations


class SeriesEngineError(Exception):
    """Base class for every error raised by the engine."""


class InvalidAlgebraError(SeriesEngineError):
    """Unknown family, rank outside the family's range, or unparsable algebra string."""


class WeightError(SeriesEngineError):
    """Weight of the wrong length, non-dominant where dominance is required, or from another system."""


class BudgetExceededError(SeriesEngineError):
    """A computation would exceed a configured size budget."""

    def __init__(self, what: str, estimate: int, limit: int):
        super().__init__(f"{what}: estimated size {estimate} exceeds budget {limit}")
        self.what = what
        self.estimate = estimate
        self.limit = limit


class GuardExceededError(SeriesEngineError):
    """Rank or iteration guard tripped."""


class InductionError(SeriesEngineError):
    """Diagram induction produced or was given something inconsistent."""


class SeriesDataError(SeriesEngineError):
    """Malformed series table or unresolved role name."""


class FormulaPoleError(SeriesEngineError):
    """A rational series formula was evaluated at one of its poles."""
