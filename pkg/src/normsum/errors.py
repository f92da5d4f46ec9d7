"""Exception types shared across the package."""


class NormsumError(Exception):
    """Base class for all package errors."""


class NonSquareError(NormsumError, ValueError):
    """Operation requires a square matrix."""


class NonSymmetricError(NormsumError, ValueError):
    """Matrix asymmetry exceeds the allowed tolerance."""


class NoConvergenceError(NormsumError, RuntimeError):
    """Spectral factorization failed its convergence certificate."""


class KOutOfRangeError(NormsumError, ValueError):
    """Ky Fan index k outside [1, min(rows, cols)] (or [2, ...] where required)."""


class SizeOverflowError(NormsumError, ValueError):
    """Requested result exceeds the dense-dimension cap."""


class NotPrimePowerError(NormsumError, ValueError):
    """Argument is not p**e for any prime p and integer e >= 1."""


class NotOneModFourError(NormsumError, ValueError):
    """Quadratic-residue graph needs q congruent to 1 mod 4."""


class TooLargeError(NormsumError, ValueError):
    """Field order above the supported limit."""


class UnsupportedOrderError(NormsumError, ValueError):
    """No supported construction produces this order."""


class OddProductError(NormsumError, ValueError):
    """Operator-norm extremal matrices need an even number of cells."""


class BadOrientationError(NormsumError, ValueError):
    """Orientation is not rows/columns, or its side has odd length."""


class MissingParamError(NormsumError, ValueError):
    """A parameter required by this bound kind was not supplied."""


class DomainViolationError(NormsumError, ValueError):
    """Input outside the hypotheses of the requested check (never clamped)."""


class OrderTooLargeError(NormsumError, ValueError):
    """Graph order above the cap for this search mode."""


class BadConfigError(NormsumError, ValueError):
    """Search configuration field outside its allowed range."""
