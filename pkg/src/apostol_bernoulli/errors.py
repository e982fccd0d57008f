"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(DomainError, ZeroDivisionError):
    """Evaluation of a rational function at one of its poles."""

    def __init__(self, point, message=None):
        self.point = point
        super().__init__(message or f"pole at {point}")


class ConsistencyError(RuntimeError):
    """Two independent constructions of the same object disagree.

    This always signals a bug; the disagreeing objects are kept on the
    exception for inspection.
    """

    def __init__(self, message, *witnesses):
        self.witnesses = witnesses
        super().__init__(message)


class BudgetError(RuntimeError):
    """Numerical engine ran out of evaluations before reaching tolerance."""

    def __init__(self, message, best=None):
        self.best = best
        super().__init__(message)


class IterationLimitError(RuntimeError):
    """A series did not meet its tail bound within the term limit."""


class PrecisionError(ArithmeticError):
    """Double precision cannot resolve the requested quantity."""
