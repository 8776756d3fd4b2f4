"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """Raised when a search or enumeration would exceed its configured budget."""
