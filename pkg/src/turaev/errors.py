"""Exception types shared by the package."""


class InvalidInput(ValueError):
    """Malformed word, alphabet order, index or exponent."""


class NotApplicable(ValueError):
    """The quantity is not defined for this input (e.g. ``s`` of a power)."""
