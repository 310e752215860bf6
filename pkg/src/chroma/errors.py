class ChromaError(ValueError):
    """Base class for every error raised by the package."""


class InstanceTooLarge(ChromaError):
    """A size guard (order bound, node budget, factorial limit) was exceeded."""
