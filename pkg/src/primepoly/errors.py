"""Shared exception types."""


class BudgetExhausted(Exception):
    """A bounded search ran out of budget before finding a hit."""

    def __init__(self, message: str, frontier=None):
        super().__init__(message)
        self.frontier = frontier


class TheoremViolation(Exception):
    """A property that is a proved theorem failed on concrete data.

    This always indicates a bug somewhere (in this package or in the
    caller's input handling), never a mathematical discovery.
    """
