"""Exception hierarchy shared by every module of the package."""


class NearnessError(Exception):
    """Base class for all errors raised by :mod:`nearness`."""


class InputError(NearnessError, ValueError):
    """Malformed or inconsistent input (unknown ids, ragged tables, bad subsets)."""

    def __init__(self, message, path=None):
        super().__init__(message if path is None else f"{path}: {message}")
        self.path = path


class StructuralError(NearnessError):
    """A structure lacks something a computation needs, e.g. an additive inverse."""


class StructuralAnomaly(NearnessError):
    """A structure passes the axioms but contradicts a uniqueness theorem."""


class ClosureError(NearnessError):
    """A coset operation produced a representative outside the upper approximation."""


class PreconditionError(NearnessError):
    """A construction was requested before its hypothesis was verified."""


class ResourceError(NearnessError):
    """A request would enumerate more than the configured bound."""
