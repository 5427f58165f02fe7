"""Error types raised by the torus / permutation / Cayley machinery."""

from typing import Optional


class TorusCayleyError(Exception):
    """Base class for every error this package raises on purpose."""


class VertexRangeError(TorusCayleyError, ValueError):
    pass


class ParameterError(TorusCayleyError, ValueError):
    pass


class CapacityError(TorusCayleyError, ValueError):
    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} {size} exceeds the configured cap {cap}")
        self.size = size
        self.cap = cap


class DegreeMismatchError(TorusCayleyError, ValueError):
    def __init__(self, left: int, right: int):
        super().__init__(f"Degree mismatch: {left} != {right}")
        self.left = left
        self.right = right


class NotAPermutationError(TorusCayleyError, ValueError):
    pass


class GroupBudgetError(TorusCayleyError, RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"Group closure exceeded the element cap of {cap}")
        self.cap = cap


class SearchBudgetError(TorusCayleyError, RuntimeError):
    """A backtracking search ran out of nodes.

    ``partial_count`` is what had been found when the budget ran out; it is
    reported for diagnostics only and must not be used as a result.
    """

    def __init__(self, budget: int, partial_count: Optional[int] = None):
        message = f"Search exceeded the node budget of {budget}"
        if partial_count is not None:
            message += f" (partial count {partial_count}, unusable)"
        super().__init__(message)
        self.budget = budget
        self.partial_count = partial_count


class ShapeError(TorusCayleyError, ValueError):
    pass


class InternalConsistencyError(TorusCayleyError, RuntimeError):
    pass


class PreconditionError(TorusCayleyError, ValueError):
    pass


class ConnectionSetError(TorusCayleyError, ValueError):
    pass


class ReportSchemaError(TorusCayleyError, ValueError):
    pass


class ReportWriteError(TorusCayleyError, RuntimeError):
    pass
