"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """Raised when an input exceeds a documented size cap; message names the cap."""
