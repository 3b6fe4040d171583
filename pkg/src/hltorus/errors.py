"""Exception taxonomy shared by every module."""


class HLTorusError(Exception):
    """Base class for all package errors."""


class ConfigurationError(HLTorusError):
    """Incompatible objects were combined (ring orders, variable lists)."""


class DomainError(HLTorusError):
    """An operation was invoked outside its mathematical domain."""


class InternalConsistencyError(HLTorusError):
    """An exactness check failed; results cannot be trusted."""


class ResourceLimitError(HLTorusError):
    """A configured memory or size ceiling was exceeded."""

    def __init__(self, message, achieved_order=None, factor_count=None):
        super().__init__(message)
        self.achieved_order = achieved_order
        self.factor_count = factor_count
