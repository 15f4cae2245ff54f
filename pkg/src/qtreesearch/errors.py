"""Exception types shared across the package."""


class SearchSimError(Exception):
    """Base class for all errors raised by qtreesearch."""


class CapacityError(SearchSimError, ValueError):
    """Register would exceed the configured qubit budget."""


class CodecError(SearchSimError, ValueError):
    """Action path cannot be encoded with the given codec."""


class TreeSpecError(SearchSimError, ValueError):
    """Malformed search tree description."""


class ConfigurationError(SearchSimError, ValueError):
    """Invalid oracle or run configuration."""


class DomainError(SearchSimError, ValueError):
    """Argument outside the mathematical domain of a function."""


class NoSolutionError(SearchSimError):
    """Search has no marked states to amplify."""
