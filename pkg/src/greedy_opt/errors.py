"""Exception types shared across the package."""


class GreedyOptError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(GreedyOptError, ValueError):
    """Operands live in different ambient dimensions."""


class InvalidInputError(GreedyOptError, ValueError):
    """An argument violates a documented precondition."""


class UnsupportedDomainError(GreedyOptError, ValueError):
    """The operation is not defined for this atom-set variant."""


class InvalidScheduleError(GreedyOptError, ValueError):
    """A step-size or error schedule produced an out-of-range value."""


class OracleFailureError(GreedyOptError, RuntimeError):
    """A reference solver failed to reach its target tolerance."""


class ConfigError(GreedyOptError, ValueError):
    """A run-configuration file failed validation.

    Carries the offending line number and key when known.
    """

    def __init__(self, message, line=None, key=None):
        detail = message
        if key is not None:
            detail = f"key {key!r}: {detail}"
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)
        self.line = line
        self.key = key
