"""Exception hierarchy shared by all modules and mapped to CLI exit codes."""


class DegslError(Exception):
    """Base class for library errors."""


class InvalidInput(DegslError, ValueError):
    """Malformed or out-of-range input (CLI exit code 2)."""


class ResourceCapExceeded(DegslError):
    """A configured size guard was hit (CLI exit code 3)."""


class TheoremCheckFailed(DegslError, AssertionError):
    """A check backed by a proven statement failed; always an implementation bug."""
