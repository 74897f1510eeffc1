"""
Error types raised by the spectral engine, the suites and the CLI
"""


class SpectralError(Exception):
    """Base class for every error raised by this package"""


class NonFiniteError(SpectralError, ValueError):
    """A NaN or Inf reached a public operation"""


class LengthError(SpectralError, ValueError):
    """Sequence length is not admissible (empty, not a power of two, mismatched)"""


class DimensionError(SpectralError, ValueError):
    """Grid dimensions are not admissible"""


class DomainError(SpectralError, ValueError):
    """Argument lies outside the domain where the formula or series is valid"""


class SingularityError(DomainError):
    """Argument sits on a removable or essential singularity of a closed form"""


class ConvergenceError(SpectralError):
    """Iterative evaluation hit its cap before meeting the tolerance

    Carries the last estimate so callers can still inspect it.
    """

    def __init__(self, message, last_estimate, steps):
        super().__init__(message)
        self.last_estimate = last_estimate
        self.steps = steps


class ImaginaryResidueError(SpectralError):
    """Inverse transform left an imaginary part too large to discard"""

    def __init__(self, message, residue):
        super().__init__(message)
        self.residue = residue


class TruncationError(SpectralError):
    """Laplace tail bound violated at the chosen horizon"""

    def __init__(self, message, suggested_horizon):
        super().__init__(message)
        self.suggested_horizon = suggested_horizon


class CorrectnessError(SpectralError):
    """Spectral output disagreed with the direct oracle"""

    def __init__(self, message, max_error):
        super().__init__(message)
        self.max_error = max_error


class UsageError(SpectralError):
    """Invalid command-line or suite configuration"""


class ReportIOError(SpectralError, OSError):
    """Report could not be written or read"""

    def __init__(self, message, path):
        super().__init__(f"{message} ({path})")
        self.path = path
