"""Exception types shared across hullforge.

Each maps to a CLI exit code: precondition violations exit 2,
certification mismatches exit 3, exceeded oracle budgets exit 4.
"""


class PreconditionError(ValueError):
    """A construction or operation was called outside its parameter range."""

    exit_code = 2


class CertificationError(RuntimeError):
    """Two independent hull computations, or a computation and a claim, disagree."""

    exit_code = 3

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class BudgetExceeded(RuntimeError):
    """An enumeration oracle would exceed its configured budget."""

    exit_code = 4
