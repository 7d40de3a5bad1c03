"""Exception hierarchy.

Input problems derive from :class:`GraphInputError`; a failed mathematical
identity derives from :class:`VerificationFailure` so callers can tell a bad
file from a broken invariant.
"""


class ResographError(Exception):
    pass


# -- input / structural -------------------------------------------------------

class GraphInputError(ResographError):
    pass


class MalformedGraph(GraphInputError):
    pass


class NotBipartite(GraphInputError):
    pass


class NotPlaneDrawing(GraphInputError):
    pass


class Disconnected(GraphInputError):
    pass


class EulerViolation(GraphInputError):
    pass


class NotTwoConnected(ResographError):
    pass


class NotACycle(ResographError):
    pass


class PathNotPeripheral(ResographError):
    pass


class NotPeripheral(ResographError):
    pass


class DisconnectedCommonBoundary(ResographError):
    pass


class DegenerateBaseFace(ResographError):
    """The graph is a single face cycle; its common boundary with the outer
    face is the whole cycle rather than a path."""


class OddFaceBoundary(ResographError):
    pass


class PreconditionViolated(ResographError):
    pass


# -- resource limits ----------------------------------------------------------

class CountLimitExceeded(ResographError):
    pass


class SizeLimitExceeded(ResographError):
    pass


class NotConvergent(ResographError):
    pass


class OrientationAmbiguous(ResographError):
    pass


# -- verification failures ----------------------------------------------------

class VerificationFailure(ResographError):
    pass


class NotALattice(VerificationFailure):
    pass


class NotDistributive(VerificationFailure):
    pass


class FormulaViolated(VerificationFailure):
    pass


class LemmaViolated(VerificationFailure):
    pass


class TheoremViolated(VerificationFailure):
    pass


class AlternationViolated(VerificationFailure):
    pass


class NoDecompositionFound(VerificationFailure):
    pass
