"""Exception types shared across the package."""


class PistairError(Exception):
    """Base class for all package errors."""


class DomainError(PistairError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class RangeError(PistairError, ValueError):
    """A query exceeds what the supplied table or sequence covers."""


class ResourceLimitError(PistairError):
    """A request exceeds a configured resource cap (see pistair.config)."""


class PrecisionExhaustedError(PistairError):
    """An enclosure could not be refined enough at the configured digit cap."""
