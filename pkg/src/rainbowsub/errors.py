"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class RainbowError(Exception):
    """Base class for all domain failures raised by rainbowsub."""

    code = "RainbowError"

    def to_json(self) -> dict:
        return {"error": self.code, "detail": str(self)}


# -- graph construction -------------------------------------------------------


class GraphError(RainbowError, ValueError):
    code = "GraphError"

    def __init__(self, message: str, edge=None):
        super().__init__(message)
        self.edge = edge


class SelfLoop(GraphError):
    code = "SelfLoop"


class DuplicateEdge(GraphError):
    code = "DuplicateEdge"


class ImproperColoring(GraphError):
    code = "ImproperColoring"

    def __init__(self, message: str, edge=None, vertex=None, other=None):
        super().__init__(message, edge)
        self.vertex = vertex
        self.other = other


class VertexOutOfRange(GraphError):
    code = "VertexOutOfRange"


class EmptyGraph(GraphError):
    code = "EmptyGraph"


class ParseError(RainbowError, ValueError):
    code = "ParseError"

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


# -- generators ---------------------------------------------------------------


class DimensionOutOfRange(RainbowError, ValueError):
    code = "DimensionOutOfRange"


class SizeOverflow(RainbowError, ValueError):
    code = "SizeOverflow"


# -- omega-maximal extraction -------------------------------------------------


class TooSmall(RainbowError, ValueError):
    code = "TooSmall"


class NoEdges(RainbowError, ValueError):
    code = "NoEdges"


class TooLarge(RainbowError, ValueError):
    code = "TooLarge"


# -- expansion / search -------------------------------------------------------


class BadProbability(RainbowError, ValueError):
    code = "BadProbability"


class BadSetSize(RainbowError, ValueError):
    code = "BadSetSize"


class ForbiddenOrigin(RainbowError, ValueError):
    code = "ForbiddenOrigin"


class SearchFailure(RainbowError):
    """A randomized search gave up. Never evidence that the object is absent."""

    code = "SearchFailure"


class NoConnection(SearchFailure):
    code = "NoConnection"

    def __init__(self, message: str, reach_sizes=()):
        super().__init__(message)
        # one (|B_u|, |B_v|) pair per attempt
        self.reach_sizes = list(reach_sizes)

    def to_json(self) -> dict:
        out = super().to_json()
        out["reach_sizes"] = [list(p) for p in self.reach_sizes]
        return out


class TooFewVertices(RainbowError, ValueError):
    code = "TooFewVertices"


class PairFailed(SearchFailure):
    code = "PairFailed"

    def __init__(self, message: str, pair, partial=None):
        super().__init__(message)
        self.pair = tuple(pair)
        self.partial = partial

    def to_json(self) -> dict:
        out = super().to_json()
        out["pair"] = list(self.pair)
        if self.partial is not None:
            out["completed_pairs"] = len(self.partial.paths)
        return out


class NoCycleFound(SearchFailure):
    code = "NoCycleFound"


class BudgetExceeded(RainbowError):
    code = "BudgetExceeded"
