"""Exception types shared across the toolkit."""


class InvalidArgument(ValueError):
    """An operation was called with inputs violating its preconditions."""


class BudgetExceeded(RuntimeError):
    """A search or enumeration exceeded its configured budget.

    Partial results, when available, are attached as ``partial`` and must be
    treated as invalid counts.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
