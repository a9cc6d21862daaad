"""Shared exception types."""


class DimensionMismatch(ValueError):
    """Operands have incompatible dimensions."""


class HypothesisFailed(ValueError):
    """A construction or proposition was invoked on data violating its hypothesis."""


class TruncationExceeded(ValueError):
    """A product left the configured degree range of a truncated model."""


class ParseError(ValueError):
    """A structure file is malformed; the message carries the offending location."""
