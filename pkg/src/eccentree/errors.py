"""Exception hierarchy shared by every module of the package."""


class TreeError(ValueError):
    """Base class for all domain errors raised by eccentree."""


# tree construction / lookup
class NotConnected(TreeError):
    pass


class HasCycle(TreeError):
    pass


class VertexOutOfRange(TreeError):
    pass


# invariants
class SingleVertexUndefined(TreeError):
    pass


# transforms
class NotAdjacent(TreeError):
    pass


class WouldDisconnect(TreeError):
    pass


class SelfMove(TreeError):
    pass


class MissingCutEdge(TreeError):
    pass


class MissingEdge(TreeError):
    pass


class NoCleanInternalPath(TreeError):
    pass


class NonPendantNeighbor(TreeError):
    pass


class DegreeTooSmall(TreeError):
    pass


class NoOffPathPendant(TreeError):
    pass


# families
class InfeasibleParams(TreeError):
    pass


class EmptyLegs(InfeasibleParams):
    pass


class NonPositiveLeg(InfeasibleParams):
    pass


class TooFewLegs(InfeasibleParams):
    pass


class HubEccentricityMismatch(InfeasibleParams):
    pass


class LengthMismatch(InfeasibleParams):
    pass


class CandidateValueMismatch(TreeError):
    pass


class UnknownTheorem(TreeError):
    pass


# enumeration / reporting
class NTooLarge(TreeError):
    pass


class UnsupportedFormat(TreeError):
    pass
