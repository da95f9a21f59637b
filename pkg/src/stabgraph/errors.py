"""Shared exception types."""


class GuardExceeded(ValueError):
    """A configurable size guard was exceeded."""
