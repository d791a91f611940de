class NotRepresentable(ValueError):
    """Raised when an integer or matrix has no difference-of-squares form."""


class ResourceError(RuntimeError):
    """Raised when an exhaustive computation exceeds its configured bound."""


class InternalError(AssertionError):
    """A construction that should succeed did not; indicates a bug."""
