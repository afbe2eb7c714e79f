"""Exception hierarchy shared by all modules."""


class NicholsError(Exception):
    """Base class for all errors raised by this package."""


class ConductorMismatch(NicholsError):
    """Scalars from different cyclotomic fields were combined."""


class DivisionByZero(NicholsError, ZeroDivisionError):
    pass


class NonInvertibleFactorial(NicholsError):
    """Some (i)_q! vanishes below the requested truncation."""


class NotIFinite(NicholsError):
    """The bicharacter is not i-finite within the search bound."""


class OrbitBoundExceeded(NicholsError):
    pass


class NotFinite(NicholsError):
    """Longest-word search exceeded the configured length bound."""


class NonHomogeneous(NicholsError):
    pass


class NotLyndon(NicholsError):
    pass


class DegreeBoundExceeded(NicholsError):
    """A computation needs graded components outside the computed window."""


class PBWDefect(NicholsError):
    """PBW monomial count or rank disagrees with the graded dimension."""


class DualityDefect(NicholsError):
    pass


class SingularGram(NicholsError):
    pass


class NoNonzeroCandidate(NicholsError):
    """No braided commutator split produced a nonzero root vector."""


class ModeMismatch(NicholsError):
    pass


class ZeroScalar(NicholsError):
    pass


class InvalidGroup(NicholsError):
    pass


class InfiniteOrder(NicholsError):
    pass


class SizeBoundExceeded(NicholsError):
    pass


class DimensionBound(NicholsError):
    pass
