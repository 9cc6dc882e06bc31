"""Exception types raised by the library.

Everything derives from :class:`RPHardyError` so callers (and the CLI, which maps
these to exit code 3) can catch domain/math errors separately from programming
errors.
"""


class RPHardyError(Exception):
    """Base class for all library errors."""


class OutsideDomain(RPHardyError):
    """A point that must lie in the open domain (or on its boundary) does not."""


class PoleAtInput(RPHardyError):
    """A kernel or series was evaluated at (or numerically on top of) a pole."""


class PoleOnLattice(PoleAtInput):
    """A partial-fraction series was evaluated on its pole lattice."""


class BranchCutViolation(RPHardyError):
    """A principal branch (sqrt/log/power) would be evaluated on its cut."""


class ParameterOutOfRange(RPHardyError):
    """A scalar parameter (beta, lambda, s, ...) violates its precondition."""


class UnsupportedPair(RPHardyError):
    """An operation was asked for a (domain, kernel) combination it does not define."""


class ZeroDenominator(RPHardyError):
    """A removable-singularity guard failed: an exact zero denominator was hit."""


class NonPositiveModulus(RPHardyError):
    """An outer function was requested for a boundary modulus that is <= 0 somewhere."""


class DivergentLogIntegral(RPHardyError):
    """The log-modulus integral of an outer function failed to converge."""


class DivergentTransform(RPHardyError):
    """A Fourier/Laplace transform did not decay inside the gridded support."""


class NegativeSupport(RPHardyError):
    """A measure that must be supported in [0, inf) has mass on the negative axis."""


class AsymmetricInput(RPHardyError):
    """An operation requiring a symmetric node set received an asymmetric one."""


class AtomAtZero(RPHardyError):
    """A splitting with a pole at the origin received an atom (or node) at 0."""


class SampleOutsidePositiveCone(RPHardyError):
    """An rp-Gram sample lies outside the positive semigroup it must belong to."""


class ReflectionViolation(RPHardyError):
    """A measure failed the reflection-symmetry precondition of a construction."""


class ToleranceNotReached(RPHardyError):
    """A quadrature or iterative routine could not meet the requested tolerance."""
