class InputError(ValueError):
    """Malformed input data (files, dimensions, indices)."""


class CapacityError(ValueError):
    """An operation would leave the materialized degree range."""


class PreconditionError(ValueError):
    """A check was requested on inputs that do not meet its hypotheses."""


class RefusedError(RuntimeError):
    """The instance lacks the structure an operation requires (e.g. cyclicity)."""
