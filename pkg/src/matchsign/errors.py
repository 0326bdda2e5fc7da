"""Exception hierarchy shared across the package."""


class MatchsignError(Exception):
    """Base class for all library errors."""


class GraphError(MatchsignError, ValueError):
    """A graph violates one of its structural invariants."""


class LoopEdge(GraphError):
    pass


class BadVertexLabel(GraphError):
    pass


class DuplicateEdgeId(GraphError):
    pass


class EdgeIdGap(GraphError):
    """Edge ids are not exactly 1..|E|."""


class UnknownEdgeId(GraphError, KeyError):
    pass


class NotSimpleGraph(GraphError):
    """Operation requires a graph without parallel edges."""


class WeightError(MatchsignError, ValueError):
    """Weight assignment is not total or has a zero value."""


class ProfileError(MatchsignError, ValueError):
    pass


class MoveError(MatchsignError, ValueError):
    pass


class NegativeCount(MoveError):
    pass


class NotAdjacent(MoveError):
    pass


class EndpointVertex(MoveError):
    pass


class IncompleteDeltas(MoveError):
    pass


class BadDelta(MoveError):
    pass


class ScriptError(MoveError):
    """A move inside a script failed; ``index`` is its 0-based position."""

    def __init__(self, index: int, cause: MoveError):
        super().__init__(f"move {index}: {type(cause).__name__}: {cause}")
        self.index = index
        self.cause = cause


class NoSolution(MatchsignError):
    """The GF(2) sign system is inconsistent."""


class VerificationFailed(MatchsignError):
    """An internal exact recomputation disagreed with a solver result."""


class TooManyMatchings(MatchsignError):
    pass


class OracleMismatch(MatchsignError):
    pass
