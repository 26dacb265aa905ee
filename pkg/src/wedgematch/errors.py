"""Exception types shared across the package."""


class ParseError(ValueError):
    """Input text does not scan in any accepted format."""


class InvalidMatchingError(ValueError):
    """Pairs or a partner table do not form a perfect matching."""


class InvalidPathError(ValueError):
    """Steps or heights do not form a confined wedge path."""


class OverCapError(ValueError):
    """Requested size exceeds the configured enumeration cap."""
