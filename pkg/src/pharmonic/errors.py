"""Exception and warning types shared across the package."""


class InvalidParameterError(ValueError):
    """A constructor or operation argument violates its stated precondition."""


class NonFiniteSampleError(ValueError):
    """A sampled field contains NaN or infinity."""


class SingularMultiplierError(ValueError):
    """A spectral multiplier is non-finite at a mode present on the grid."""


class TruncationError(RuntimeError):
    """An operation would silently discard more coefficient energy than allowed."""


class DomainError(ValueError):
    """Arguments lie outside the region where a formula is defined."""


class SingularPointError(DomainError):
    """Kernel evaluation requested at (or too close to) the diagonal singularity."""


class QuadratureError(RuntimeError):
    """A quadrature failed to reach its error target under refinement."""


class ConfigError(ValueError):
    """A suite configuration is inconsistent; maps to CLI exit code 2."""


class UnknownSuiteError(ConfigError):
    """Requested verification suite does not exist."""


class TruncationWarning(UserWarning):
    """Coefficient tail energy beyond the resolved band exceeds tolerance."""


class AliasingWarning(UserWarning):
    """Spectral energy near the uniform-grid Nyquist ring exceeds tolerance."""


class ResolutionWarning(UserWarning):
    """Requested operation is near the resolution limit of the grid."""
