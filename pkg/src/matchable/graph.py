"""Bipartite graphs, matchings, and the canonical relabeling everything else uses.

Indices are 0-based throughout the in-memory API; the text formats in
:mod:`matchable.io` translate to the 1-based convention used on disk.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from .errors import DuplicateEdge, EdgeAbsent, IndexOutOfRange, InvalidMatching

Edge = tuple[int, int]


class BipartiteGraph:
    """Two-part graph with index adjacency in both directions.

    Instances are immutable after construction and safe to share between
    concurrent readers.  ``adj_left[i]`` lists the right neighbours of left
    node ``i`` in ascending order; ``adj_right`` is the transpose.  The edge
    list keeps its construction order, which every classification result is
    indexed against; internally the endpoints live in two parallel flat
    lists so million-edge scans stay sequential.
    """

    __slots__ = (
        "n1",
        "n2",
        "edge_lefts",
        "edge_rights",
        "adj_left",
        "adj_right",
        "_edges_cache",
        "_edge_index",
    )

    def __init__(self, n1: int, n2: int, edge_list: Iterable[Edge]):
        if n1 < 0 or n2 < 0:
            raise IndexOutOfRange(f"part sizes must be non-negative, got {n1} and {n2}")
        lefts: list[int] = []
        rights: list[int] = []
        for i, j in edge_list:
            lefts.append(i)
            rights.append(j)
        if lefts:
            # fast bounds check; rescan for the offender only on failure
            if min(lefts) < 0 or max(lefts) >= n1:
                for i in lefts:
                    if not (0 <= i < n1):
                        raise IndexOutOfRange(f"left endpoint {i} outside [0, {n1})")
            if min(rights) < 0 or max(rights) >= n2:
                for j in rights:
                    if not (0 <= j < n2):
                        raise IndexOutOfRange(f"right endpoint {j} outside [0, {n2})")
            if len(set(zip(lefts, rights))) != len(lefts):
                seen: set[Edge] = set()
                for e in zip(lefts, rights):
                    if e in seen:
                        raise DuplicateEdge(f"edge {e} appears more than once")
                    seen.add(e)
        self.n1 = n1
        self.n2 = n2
        self.edge_lefts = lefts
        self.edge_rights = rights
        adj_left: list[list[int]] = [[] for _ in range(n1)]
        adj_right: list[list[int]] = [[] for _ in range(n2)]
        for i, j in zip(lefts, rights):
            adj_left[i].append(j)
            adj_right[j].append(i)
        for lst in adj_left:
            lst.sort()
        for lst in adj_right:
            lst.sort()
        self.adj_left = adj_left
        self.adj_right = adj_right
        self._edges_cache: tuple[Edge, ...] | None = None
        self._edge_index: dict[Edge, int] | None = None

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def m(self) -> int:
        return len(self.edge_lefts)

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges as (left, right) pairs, in construction order."""
        if self._edges_cache is None:
            self._edges_cache = tuple(zip(self.edge_lefts, self.edge_rights))
        return self._edges_cache

    @property
    def edge_index(self) -> dict[Edge, int]:
        """Edge -> position in the edge list, built on first use."""
        if self._edge_index is None:
            self._edge_index = {e: k for k, e in enumerate(self.edges)}
        return self._edge_index

    def has_edge(self, i: int, j: int) -> bool:
        return (i, j) in self.edge_index

    def transposed(self) -> "BipartiteGraph":
        """Same graph with the two parts swapped; edge order is preserved."""
        return BipartiteGraph(self.n2, self.n1, zip(self.edge_rights, self.edge_lefts))

    def __repr__(self) -> str:
        return f"BipartiteGraph(n1={self.n1}, n2={self.n2}, m={self.m})"


def build_graph(n1: int, n2: int, edge_list: Iterable[Edge]) -> BipartiteGraph:
    """Validated graph construction; see :class:`BipartiteGraph`."""
    return BipartiteGraph(n1, n2, edge_list)


class Matching:
    """Edge set with O(1) partner lookup on both sides.

    The constructor only normalises.  Whether the pairs actually form a
    matching inside a particular graph is the job of
    :func:`verify_matching`; operations that need validity raise
    :class:`InvalidMatching` themselves.
    """

    __slots__ = ("pairs", "left_partner", "right_partner")

    def __init__(self, pairs: Iterable[Edge] = ()):
        self.pairs: tuple[Edge, ...] = tuple((i, j) for i, j in pairs)
        self.left_partner: dict[int, int] = {}
        self.right_partner: dict[int, int] = {}
        for i, j in self.pairs:
            self.left_partner[i] = j
            self.right_partner[j] = i

    @property
    def size(self) -> int:
        return len(self.pairs)

    def as_set(self) -> frozenset[Edge]:
        return frozenset(self.pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.as_set() == other.as_set()

    def __hash__(self) -> int:
        return hash(self.as_set())

    def __len__(self) -> int:
        return len(self.pairs)

    def __repr__(self) -> str:
        return f"Matching({sorted(self.pairs)!r})"


def verify_matching(g: BipartiteGraph, m: Matching) -> bool:
    """Total predicate: the pairs are non-adjacent and all are edges of ``g``."""
    pairs = m.pairs
    if len(m.left_partner) != len(pairs) or len(m.right_partner) != len(pairs):
        return False
    # membership via the sorted adjacency: avoids building an edge
    # dictionary on million-edge graphs just to check t pairs
    adj = g.adj_left
    n1, n2 = g.n1, g.n2
    for i, j in pairs:
        if not (0 <= i < n1 and 0 <= j < n2):
            return False
        row = adj[i]
        pos = bisect_left(row, j)
        if pos == len(row) or row[pos] != j:
            return False
    return True


@dataclass(frozen=True)
class CanonicalView:
    """Relabeling that puts a given maximum matching on the diagonal.

    ``left_perm[i]`` is the canonical index of original left node ``i``;
    matched pair ``k`` of the input matching lands on canonical ``(k, k)``
    and unmatched nodes get indices ``>= t``.  Both permutations are
    bijections, so the view round-trips exactly.
    """

    left_perm: tuple[int, ...]
    right_perm: tuple[int, ...]
    t: int
    inv_left: tuple[int, ...] = field(init=False, repr=False, compare=False)
    inv_right: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        inv_l = [0] * len(self.left_perm)
        for orig, canon in enumerate(self.left_perm):
            inv_l[canon] = orig
        inv_r = [0] * len(self.right_perm)
        for orig, canon in enumerate(self.right_perm):
            inv_r[canon] = orig
        object.__setattr__(self, "inv_left", tuple(inv_l))
        object.__setattr__(self, "inv_right", tuple(inv_r))

    @classmethod
    def for_matching(cls, n1: int, n2: int, m: Matching) -> "CanonicalView":
        left_perm = [-1] * n1
        right_perm = [-1] * n2
        for k, (i, j) in enumerate(m.pairs):
            left_perm[i] = k
            right_perm[j] = k
        t = m.size
        nxt = t
        for i in range(n1):
            if left_perm[i] < 0:
                left_perm[i] = nxt
                nxt += 1
        nxt = t
        for j in range(n2):
            if right_perm[j] < 0:
                right_perm[j] = nxt
                nxt += 1
        return cls(tuple(left_perm), tuple(right_perm), t)

    @property
    def is_identity(self) -> bool:
        return all(p == i for i, p in enumerate(self.left_perm)) and all(
            p == j for j, p in enumerate(self.right_perm)
        )

    def to_canonical_edge(self, e: Edge) -> Edge:
        return (self.left_perm[e[0]], self.right_perm[e[1]])

    def from_canonical_edge(self, e: Edge) -> Edge:
        return (self.inv_left[e[0]], self.inv_right[e[1]])

    def map_matching(self, m: Matching) -> Matching:
        return Matching(self.to_canonical_edge(p) for p in m.pairs)

    def restore_matching(self, m: Matching) -> Matching:
        return Matching(self.from_canonical_edge(p) for p in m.pairs)


def canonicalize(g: BipartiteGraph, m: Matching) -> tuple[BipartiteGraph, CanonicalView]:
    """Relabel ``g`` so that ``m`` becomes ``{(k, k) : k < t}``.

    The returned graph keeps the input edge order, so position ``k`` in its
    edge list is edge ``k`` of ``g`` under the view.  Raises
    :class:`InvalidMatching` when ``m`` is not a matching of ``g``.
    """
    if not verify_matching(g, m):
        raise InvalidMatching("the supplied pairs are not a matching of this graph")
    view = CanonicalView.for_matching(g.n1, g.n2, m)
    lp, rp = view.left_perm, view.right_perm
    canonical = BipartiteGraph(
        g.n1,
        g.n2,
        zip(
            (lp[i] for i in g.edge_lefts),
            (rp[j] for j in g.edge_rights),
        ),
    )
    return canonical, view


class EdgeLabel(str, Enum):
    """Classification of one edge relative to a fixed maximum matching."""

    NOT_ALLOWED = "not_allowed"
    LOWER = "lower"
    TYPE1 = "type1"
    TYPE2 = "type2"

    @property
    def allowed(self) -> bool:
        return self is not EdgeLabel.NOT_ALLOWED


class EdgeClassification:
    """Per-edge labels, parallel to ``graph.edges``."""

    __slots__ = ("graph", "labels")

    def __init__(self, graph: BipartiteGraph, labels: Iterable[EdgeLabel]):
        self.graph = graph
        self.labels: tuple[EdgeLabel, ...] = tuple(labels)
        if len(self.labels) != graph.m:
            raise ValueError("one label per edge required")

    def label_of(self, i: int, j: int) -> EdgeLabel:
        k = self.graph.edge_index.get((i, j))
        if k is None:
            raise EdgeAbsent(f"edge ({i}, {j}) is not in the graph")
        return self.labels[k]

    def allowed_edges(self) -> list[Edge]:
        return [e for e, lab in zip(self.graph.edges, self.labels) if lab.allowed]

    @property
    def allowed_count(self) -> int:
        return sum(1 for lab in self.labels if lab.allowed)

    def __iter__(self) -> Iterator[tuple[Edge, EdgeLabel]]:
        return iter(zip(self.graph.edges, self.labels))

    def __len__(self) -> int:
        return len(self.labels)
