"""Exception types shared across the package."""


class ModelError(ValueError):
    """Invalid coefficient-model parameters or JSON payload."""


class DomainError(ValueError):
    """Spectral point outside the domain an operation supports."""


class TailError(RuntimeError):
    """Coefficient variation tail too large at the allowed index range."""


class ConvergenceError(RuntimeError):
    """Iteration or sweep failed to meet its tolerance."""


class OverflowSignal(RuntimeError):
    """Raw polynomial values left the representable range; use scaling."""
