"""Exception types raised by the hybrid Tucker toolkit."""


class HybridTuckerError(Exception):
    """Base class for toolkit errors."""


class DimensionMismatchError(HybridTuckerError, ValueError):
    """Operand shapes are incompatible."""


class InvalidModeError(HybridTuckerError, ValueError):
    """A 1-based mode number is outside 1..d."""


class RankDeficiencyError(HybridTuckerError, ValueError):
    """A factor is rank-deficient or too ill-conditioned to invert."""


class ConvergenceError(HybridTuckerError, RuntimeError):
    """An iterative kernel did not converge."""


class TensorFileError(HybridTuckerError, ValueError):
    """A tensor or model file is malformed."""

    def __init__(self, path, reason: str):
        self.path = str(path)
        self.reason = reason
        super().__init__(f"{self.path}: {reason}")
