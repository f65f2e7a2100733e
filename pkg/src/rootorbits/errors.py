"""Exception hierarchy.

Everything raised on bad input derives from :class:`RootOrbitsError` so
the CLI can map it to exit status 2. The ``*Failed`` / ``*Exceeded``
errors that the theory says cannot happen on valid input signal a bug.
"""


class RootOrbitsError(ValueError):
    pass


class NotGCM(RootOrbitsError):
    pass


class NotSymmetrizable(RootOrbitsError):
    pass


class NotAffine(RootOrbitsError):
    pass


class InvalidAffChoice(RootOrbitsError):
    pass


class UnknownLabel(RootOrbitsError):
    pass


class RankOutOfRange(RootOrbitsError):
    pass


class NotRealRoot(RootOrbitsError):
    pass


class NotARoot(RootOrbitsError):
    pass


class BoundTooSmall(RootOrbitsError):
    pass


class WindowExceeded(RootOrbitsError):
    pass


class NotPermutation(RootOrbitsError):
    pass


class NotInitialOrFinal(RootOrbitsError):
    pass


class NotTypeACycle(RootOrbitsError):
    pass


class FiniteType(RootOrbitsError):
    pass


class NotFiniteType(RootOrbitsError):
    pass


class WindowTooSmall(RootOrbitsError):
    pass


class KappaNotFound(RootOrbitsError):
    pass


class RankNot3(RootOrbitsError):
    pass


class SolveFailed(RuntimeError):
    pass


class OrderBoundExceeded(RuntimeError):
    pass


class NotProportional(RuntimeError):
    pass


class NotNegative(RuntimeError):
    pass


class OrderingFailed(RuntimeError):
    pass
