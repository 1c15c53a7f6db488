"""Exceptions shared across modules."""


class SizeCapError(ValueError):
    """A generator or exhaustive search would exceed its configured size cap."""
