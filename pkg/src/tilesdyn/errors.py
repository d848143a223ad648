"""Exception types raised across the package."""


class ConfigError(ValueError):
    """Inconsistent dimensions, labels or configuration values."""


class PreconditionError(ValueError):
    """Numerical precondition violated (non-Hermitian generator, unnormalized amplitudes, ...)."""
