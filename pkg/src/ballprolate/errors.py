"""Exception types shared across the package."""


class EigenConvergenceError(RuntimeError):
    """The tridiagonal eigensolver failed to converge."""


class TruncationNotConverged(RuntimeError):
    """Doubling the expansion truncation moved an eigenvalue more than tolerated."""


class DegenerateEndpoint(ArithmeticError):
    """The radial eigenfunction underflowed at the left endpoint eta = -1."""


class NonPositiveLambda(ArithmeticError):
    """The Fourier eigenvalue came out non-positive, indicating a sign bug."""


class IndexOutOfRange(ValueError):
    """Spherical-harmonic index ell lies outside the valid range for (d, n)."""


class UnsupportedDimension(ValueError):
    """The requested operation is not available in this dimension."""
