"""Exception types shared across the package."""


class ValidationError(ValueError):
    """A value or configuration violates one of the documented invariants."""


class ConfigError(ValidationError):
    """A config file could not be parsed; carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UndefinedMetricError(ValidationError):
    """A metric was requested over an empty sample (n = 0)."""


class IncompleteTraceError(ValidationError):
    """A trace is missing records for transactions that were scheduled."""


class OutOfWindowError(ValidationError):
    """A record's send time falls outside the batching window."""


class BatchShapeError(ValidationError):
    """Batch tables with mismatched structure cannot be averaged."""
