"""Exception types shared across the package."""

from __future__ import annotations


class InvalidParameterError(ValueError):
    """An argument violates a documented precondition."""


class CapacityError(ValueError):
    """The requested object is too large for this representation."""


class FormatError(ValueError):
    """A text file (graph, strategy, nest order) failed to parse."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidStrategyError(ValueError):
    """A strategy is not compatible with the graph it is run on."""


class HomomorphismError(ValueError):
    """A vertex map does not send every edge to an edge."""

    def __init__(self, edge: tuple[int, int], message: str):
        super().__init__(message)
        self.edge = edge


class InvalidOrderError(ValueError):
    """A nest order does not have the required segment structure."""


class NonTerminatingError(RuntimeError):
    """A nest-order strategy stopped shrinking the rabbit set (too few hunters)."""


class InapplicableError(ValueError):
    """The nesting theorem's hypotheses do not hold for this graph/order."""

    def __init__(self, message: str, u_even: int | None = None, u_odd: int | None = None):
        super().__init__(message)
        self.u_even = u_even
        self.u_odd = u_odd


class BudgetExceededError(RuntimeError):
    """A search or enumeration ran past its work budget."""

    def __init__(self, message: str, explored: int = 0, best_lower_bound: int | None = None):
        super().__init__(message)
        self.explored = explored
        self.best_lower_bound = best_lower_bound
