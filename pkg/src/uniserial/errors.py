"""Exception hierarchy shared by every module of the package."""


class UniserialError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRange(UniserialError):
    """A successor or predecessor was requested past an endpoint of the order."""


class NotALoop(UniserialError):
    """A deck shift was requested on a linear site."""


class InvalidLabel(UniserialError):
    """An object label (socle, top, winding) does not describe an object."""


class SiteMismatch(UniserialError):
    """Two operands live on different sites."""


class ProjectiveObject(UniserialError):
    """The object is projective, so it has no translate or almost split sequence."""


class InjectiveObject(UniserialError):
    """The object is injective, so it has no inverse translate."""


class CompositionMismatch(UniserialError):
    """Morphisms are not composable."""


class NoPath(UniserialError):
    """There is no path between the requested simples."""


class EmptyKeepSet(UniserialError):
    """A perpendicular reduction was requested with nothing to keep."""


class NotInSubcategory(UniserialError):
    """An object does not lie in the perpendicular subcategory."""


class PrecisionMismatch(UniserialError):
    """Truncated series with different precisions were combined."""


class InfiniteLength(UniserialError):
    """A finite-length object was required."""


class RankMismatch(UniserialError):
    """Matrix representations over quivers of different rank were combined."""


class SupportOutOfWindow(UniserialError):
    """The support of an object leaves the vertex window seen by a restriction."""


class NotOrderPreserving(UniserialError):
    """A vertex bijection does not commute with successor and predecessor."""
