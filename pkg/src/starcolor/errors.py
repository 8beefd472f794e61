"""Exception types and the shared search-budget counter."""
from __future__ import annotations


class StarcolorError(Exception):
    """Base class for all package errors."""


class GraphFormatError(StarcolorError):
    """Malformed graph/hypergraph/coloring/config text."""


class DomainError(StarcolorError):
    """Argument outside the operation's domain (bad sizes, bad parameters)."""


class DisconnectedGraph(StarcolorError):
    """A connected graph was required."""


class SizeMismatch(StarcolorError):
    """Coloring does not cover the graph's vertex set."""


class SearchBudgetExceeded(StarcolorError):
    """A backtracking search ran out of its node budget."""


class ConditionViolated(StarcolorError):
    """The forest/tree even-distance precondition does not hold."""


class NotApplicable(StarcolorError):
    """Operation undefined for this input (e.g. no degree-3 vertex)."""


class InternalInvariant(StarcolorError):
    """A property the theory guarantees failed to hold; indicates a bug."""


class TooSmall(StarcolorError):
    """Input below the minimum size for the operation."""


class PreconditionViolated(StarcolorError):
    """A stated precondition failed; carries the offending vertex when known."""

    def __init__(self, message: str, vertex: int | None = None):
        super().__init__(message)
        self.vertex = vertex


class ExceedsMaxK(StarcolorError):
    """No valid coloring exists within the requested palette limit."""


class Budget:
    """Mutable countdown shared across nested searches.

    ``spend`` raises SearchBudgetExceeded once the allotment is used up, so a
    budget hit is always an explicit error and never a silent wrong answer.
    """

    def __init__(self, nodes: int):
        if nodes < 0:
            raise DomainError("budget must be nonnegative")
        self.remaining = nodes

    def spend(self, amount: int = 1) -> None:
        self.remaining -= amount
        if self.remaining < 0:
            raise SearchBudgetExceeded("search node budget exhausted")


def as_budget(budget: "Budget | int | None") -> Budget | None:
    if budget is None or isinstance(budget, Budget):
        return budget
    return Budget(budget)
