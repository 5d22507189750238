"""Exception types shared across the package."""


class UsageError(ValueError):
    """Malformed user input: bad partition/class string or flag value."""


class CapabilityError(ValueError):
    """Requested n is beyond the supported range for the chosen mode."""


class ConsistencyError(RuntimeError):
    """An exactness invariant failed; results cannot be trusted."""
