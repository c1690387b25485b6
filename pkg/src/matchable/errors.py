"""Exception types raised across the package."""


class MatchableError(Exception):
    """Base class for every error this package raises on purpose."""


class IndexOutOfRange(MatchableError):
    """An edge endpoint lies outside its part of the graph."""


class DuplicateEdge(MatchableError):
    """The same (left, right) pair appears twice in an edge list."""


class InvalidMatching(MatchableError):
    """The supplied pairs are not a matching of the host graph."""


class NotAMatching(InvalidMatching):
    """Alias used where a matching argument fails validation."""


class NotCanonicalPerfect(MatchableError):
    """The graph is not in canonical form with a perfect diagonal matching."""


class EdgeAbsent(MatchableError):
    """The referenced edge is not in the graph."""


class EdgeNotAllowed(MatchableError):
    """The edge is not part of any maximum matching, so it cannot be taken."""


class NotNonAdjacent(MatchableError):
    """A supposed set of independent edges has two edges sharing a node."""


class NotRegular(MatchableError):
    """The graph does not have a uniform node degree."""


class TooLarge(MatchableError):
    """Input exceeds the size cap of an intentionally exponential routine."""


class GraphFormatError(MatchableError):
    """A graph text file violates the line-oriented format."""


class InvalidBoard(MatchableError):
    """A domino board is empty, disconnected, or syntactically bad."""


class NotTileable(MatchableError):
    """The board admits no perfect domino tiling."""


class GameOver(MatchableError):
    """The game session already finished; no further moves accepted."""


class CellOccupied(MatchableError):
    """A placement targets a cell that is already covered."""


class OffBoard(MatchableError):
    """A placement targets a cell outside the board."""


class NotAdjacent(MatchableError):
    """The two cells of a placement do not share an edge."""
