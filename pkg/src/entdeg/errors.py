"""Exception and warning types shared across the package."""


class EntdegError(Exception):
    """Base class for all package-specific errors."""


class PoleError(EntdegError):
    """Argument coincides with a pole of the gamma function."""


class PrecisionError(EntdegError):
    """Internal error estimate exceeds the requested tolerance."""


class SmallNuError(EntdegError):
    """Order parameter nu too close to zero for a sinh(pi*nu) denominator."""


class RegionError(EntdegError):
    """Minkowski point lies outside the t - x < 0 chart."""


class WindowError(EntdegError):
    """Sampled field has not decayed at the integration window boundary."""


class TruncationError(EntdegError):
    """Fock-space cutoff discards more probability weight than allowed."""


class EigenConvergenceError(EntdegError):
    """Symmetric eigensolver failed to converge."""


class NegativeEigenvalueError(EntdegError):
    """Density-matrix eigenvalue below the roundoff floor."""


class SweepFailureError(EntdegError):
    """Too many grid points failed within a single sweep scenario."""


class DomainError(EntdegError):
    """Input outside the mathematical domain of a closed-form expression."""


class UnderflowToZero(UserWarning):
    """Result underflowed to zero; the returned 0.0 is legitimate."""
