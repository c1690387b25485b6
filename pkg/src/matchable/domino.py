"""Domino boards, their bipartite graphs, and the game state machine.

A board is a connected set of unit cells, checkered white/black by
coordinate parity.  Dominoes cover two edge-adjacent cells, so a full tiling
is a perfect matching of the white-to-black adjacency graph; a placement
"blocks" the tiling exactly when its edge is not part of any maximum
matching of the remaining graph.
"""

from __future__ import annotations

import secrets
from collections import deque
from dataclasses import dataclass, field
from enum import Enum

from . import dynamic
from .errors import (
    CellOccupied,
    GameOver,
    InvalidBoard,
    NotAdjacent,
    NotTileable,
    OffBoard,
)
from .graph import BipartiteGraph, Edge
from .matching import hopcroft_karp

Cell = tuple[int, int]

_STEPS = ((-1, 0), (1, 0), (0, -1), (0, 1))


def is_white(cell: Cell) -> bool:
    return (cell[0] + cell[1]) % 2 == 0


@dataclass(frozen=True)
class Board:
    """Connected set of unit cells; row 0 is the top row."""

    cells: frozenset[Cell]

    def __post_init__(self) -> None:
        if not self.cells:
            raise InvalidBoard("board has no cells")
        for r, c in self.cells:
            if r < 0 or c < 0:
                raise InvalidBoard(f"cell ({r}, {c}) has negative coordinates")
        # connectivity under shared-edge adjacency; touching corners do not count
        start = next(iter(self.cells))
        seen = {start}
        queue = deque([start])
        while queue:
            r, c = queue.popleft()
            for dr, dc in _STEPS:
                nb = (r + dr, c + dc)
                if nb in self.cells and nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
        if len(seen) != len(self.cells):
            raise InvalidBoard("board is not edge-connected")

    @classmethod
    def from_rows(cls, rows: list[str]) -> "Board":
        """Parse rows of ``#`` (cell) and ``.`` (hole)."""
        cells = set()
        for r, row in enumerate(rows):
            for c, ch in enumerate(row):
                if ch == "#":
                    cells.add((r, c))
                elif ch != ".":
                    raise InvalidBoard(f"unknown character {ch!r} in row {r}")
        return cls(frozenset(cells))

    @property
    def rows(self) -> int:
        return max(r for r, _ in self.cells) + 1

    @property
    def cols(self) -> int:
        return max(c for _, c in self.cells) + 1

    @property
    def area(self) -> int:
        return len(self.cells)

    def white_cells(self) -> list[Cell]:
        return sorted(c for c in self.cells if is_white(c))

    def black_cells(self) -> list[Cell]:
        return sorted(c for c in self.cells if not is_white(c))


@dataclass(frozen=True)
class Placement:
    """One domino: two edge-adjacent cells, stored in sorted order."""

    cells: tuple[Cell, Cell]

    def __init__(self, a: Cell, b: Cell):
        a = (a[0], a[1])
        b = (b[0], b[1])
        if abs(a[0] - b[0]) + abs(a[1] - b[1]) != 1:
            raise NotAdjacent(f"cells {a} and {b} do not share an edge")
        object.__setattr__(self, "cells", (min(a, b), max(a, b)))


@dataclass(frozen=True)
class GridMaps:
    """Inverse bijections between board cells and graph node indices."""

    white_cells: tuple[Cell, ...]
    black_cells: tuple[Cell, ...]
    white_index: dict[Cell, int]
    black_index: dict[Cell, int]

    def edge_for(self, p: Placement) -> Edge:
        a, b = p.cells
        if is_white(a):
            return (self.white_index[a], self.black_index[b])
        return (self.white_index[b], self.black_index[a])

    def placement_for(self, e: Edge) -> Placement:
        return Placement(self.white_cells[e[0]], self.black_cells[e[1]])


def board_to_graph(b: Board) -> tuple[BipartiteGraph, GridMaps]:
    """Left part = white cells, right part = black cells, one edge per adjacency."""
    whites = tuple(b.white_cells())
    blacks = tuple(b.black_cells())
    white_index = {cell: k for k, cell in enumerate(whites)}
    black_index = {cell: k for k, cell in enumerate(blacks)}
    edges = []
    for cell in whites:
        r, c = cell
        for dr, dc in _STEPS:
            nb = (r + dr, c + dc)
            if nb in black_index:
                edges.append((white_index[cell], black_index[nb]))
    g = BipartiteGraph(len(whites), len(blacks), edges)
    return g, GridMaps(whites, blacks, white_index, black_index)


class GameStatus(str, Enum):
    IN_PROGRESS = "in_progress"
    WON = "won"
    LOST = "lost"


@dataclass
class MoveOutcome:
    accepted: bool
    reason: str | None
    bad_move_count: int
    max_bad_moves: int
    placements: tuple[Placement, ...]
    allowed_moves: tuple[Placement, ...]
    status: GameStatus


@dataclass
class GameSession:
    """One running game; mutate only under exclusive access."""

    session_id: str
    board: Board
    maps: GridMaps
    state: dynamic.DynamicState
    max_bad_moves: int
    placements: list[Placement] = field(default_factory=list)
    bad_move_count: int = 0
    status: GameStatus = GameStatus.IN_PROGRESS
    covered: set[Cell] = field(default_factory=set)


def new_session(b: Board, max_bad_moves: int) -> GameSession:
    """Start a game on a tileable board; :class:`NotTileable` otherwise."""
    if max_bad_moves < 1:
        raise ValueError("max_bad_moves must be at least 1")
    g, maps = board_to_graph(b)
    if g.n1 != g.n2:
        raise NotTileable(
            f"board has {g.n1} white and {g.n2} black cells; a tiling needs equal counts"
        )
    m = hopcroft_karp(g)
    if m.size * 2 != b.area:
        raise NotTileable("board admits no perfect tiling")
    return GameSession(
        session_id=secrets.token_urlsafe(12),
        board=b,
        maps=maps,
        state=dynamic.initial_state(g, m),
        max_bad_moves=max_bad_moves,
    )


def _allowed_placements(s: GameSession) -> tuple[Placement, ...]:
    moves = [
        s.maps.placement_for(e)
        for e, label in s.state.classification
        if label.allowed
    ]
    moves.sort(key=lambda p: p.cells)
    return tuple(moves)


def allowed_moves(s: GameSession) -> list[Placement]:
    """Placements the current position can still extend to a full tiling."""
    if s.status is not GameStatus.IN_PROGRESS:
        raise GameOver(f"game already {s.status.value}")
    return list(_allowed_placements(s))


def apply_move(s: GameSession, p: Placement) -> MoveOutcome:
    """Play one domino.

    Geometrically invalid placements raise (:class:`OffBoard`,
    :class:`CellOccupied`; non-adjacent pairs never become a
    :class:`Placement` in the first place) and do not touch the bad-move
    budget.  A placement that would make the tiling impossible is rejected
    in the outcome and consumes budget; a usable one shrinks the graph and
    may finish the game.
    """
    if s.status is not GameStatus.IN_PROGRESS:
        raise GameOver(f"game already {s.status.value}")
    for cell in p.cells:
        if cell not in s.board.cells:
            raise OffBoard(f"cell {cell} is outside the board")
    for cell in p.cells:
        if cell in s.covered:
            raise CellOccupied(f"cell {cell} is already covered")

    edge = s.maps.edge_for(p)
    label = s.state.classification.label_of(*edge)
    if not label.allowed:
        s.bad_move_count += 1
        if s.bad_move_count >= s.max_bad_moves:
            s.status = GameStatus.LOST
        return _outcome(s, accepted=False, reason="blocks_completion")

    s.state = dynamic.remove_allowed_edge(s.state, edge)
    s.placements.append(p)
    s.covered.update(p.cells)
    if len(s.covered) == s.board.area:
        s.status = GameStatus.WON
    return _outcome(s, accepted=True, reason=None)


def _outcome(s: GameSession, accepted: bool, reason: str | None) -> MoveOutcome:
    return MoveOutcome(
        accepted=accepted,
        reason=reason,
        bad_move_count=s.bad_move_count,
        max_bad_moves=s.max_bad_moves,
        placements=tuple(s.placements),
        allowed_moves=_allowed_placements(s),
        status=s.status,
    )
