"""Exception hierarchy shared by all modules."""


class ImTodaError(Exception):
    """Base class for all library faults."""


class ParameterError(ImTodaError, ValueError):
    """A numeric parameter is outside its admissible range."""


class DimensionError(ImTodaError, ValueError):
    """Vector or matrix shapes do not match the root system's rank."""


class NeutralityError(ImTodaError, ValueError):
    """Charges do not satisfy the screening/neutrality condition."""


class DomainError(ImTodaError, ValueError):
    """Argument lies outside the domain of a special-function representation."""


class ConfigurationError(ImTodaError, ValueError):
    """A sampler or run configuration is inconsistent with the integrand."""


class ConvergenceRefusal(ImTodaError, RuntimeError):
    """The integral fails its convergence diagnostics; refusing to integrate."""


class InternalConsistencyError(ImTodaError, RuntimeError):
    """An identity that must hold by construction failed; indicates a bug."""


class UsageError(ImTodaError, ValueError):
    """Malformed command-line or config-file input."""
