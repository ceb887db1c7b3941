"""
Error hierarchy shared by every app.

The pipeline maps the three families onto exit codes:
ArgumentError -> 1 (usage), DataError -> 2 (data), ResourceGuardError -> 3 (resource guard).
Apps subclass these next to their services.
"""

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_RESOURCE = 3


class PasswordNetworkError(Exception):
    """Base class; message is safe to print on the command line."""

    exit_code = EXIT_DATA


class ArgumentError(PasswordNetworkError, ValueError):
    exit_code = EXIT_USAGE


class DataError(PasswordNetworkError):
    exit_code = EXIT_DATA


class ResourceGuardError(PasswordNetworkError):
    """A configured budget would be exceeded; raise the budget or shrink the input."""

    exit_code = EXIT_RESOURCE

    def __init__(self, message: str, requested: int = None, budget: int = None):
        self.requested = requested
        self.budget = budget
        super().__init__(message)


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, PasswordNetworkError):
        return exc.exit_code
    if isinstance(exc, ValueError):
        return EXIT_USAGE
    return EXIT_DATA
