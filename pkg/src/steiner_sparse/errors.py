"""Exception types shared across the package.

Each maps to a CLI exit code of 2; verification failures are not
exceptions, they are reported through ``ViolationReport``.
"""


class UsageError(ValueError):
    """Invalid argument: out-of-range vertex or element, malformed family."""


class DomainError(ValueError):
    """Parameters outside the range where a construction is defined."""


class BudgetExceeded(RuntimeError):
    """An exhaustive routine refused an instance above its size guard."""


class FormatError(ValueError):
    """Malformed edge-list file."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
