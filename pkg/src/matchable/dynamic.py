"""Remove a usable edge's endpoints and repair the matching without a re-search.

When an allowed edge materialises (a couple leaves, a domino is placed), the
reduced graph is the old one minus both endpoints and their incident edges.
A maximum matching of the reduced graph always has size t - 1 and can be
built from the retained directed views instead of running the matching
engine again:

* a matched edge, or an edge with an uncovered endpoint, just costs the one
  matched pair it touches;
* an unmatched type 1 edge ``(i, j)`` is completed into an alternating cycle
  by a path from ``j`` back to ``i`` inside their strongly connected
  component, and the matched pairs along the cycle are rotated;
* a type 2 edge is completed into an alternating path that ends in an
  uncovered node, found by a forward search from ``j`` in the left-to-right
  view or, failing that, from ``i`` in the right-to-left view; the maximum
  matching the path induces is reconstructed and the removed edge dropped.

Reclassification afterwards is a fresh O(n + m) pass.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .allowed import GraphAnalysis, analyze
from .errors import EdgeAbsent, EdgeNotAllowed
from .graph import BipartiteGraph, Edge, EdgeClassification, EdgeLabel, Matching
from .matching import hopcroft_karp


@dataclass
class DynamicState:
    """Graph, matching, and classification kept consistent between moves.

    Treat instances as immutable; every update returns a new state.  A state
    belongs to one logical session at a time, distinct states are
    independent.
    """

    graph: BipartiteGraph
    matching: Matching
    classification: EdgeClassification
    analysis: GraphAnalysis

    @property
    def h_lr(self):
        return self.analysis.h_lr

    @property
    def h_rl(self):
        return self.analysis.h_rl


def initial_state(g: BipartiteGraph, m: Matching | None = None) -> DynamicState:
    """Classify ``g`` (finding a maximum matching first when none is given)."""
    if m is None:
        m = hopcroft_karp(g)
    a = analyze(g, m)
    return DynamicState(g, m, a.classification, a)


def _bfs_path(
    targets: list[list[int]],
    start: int,
    goal,
    allow=None,
) -> list[int] | None:
    """Shortest directed path from ``start`` to the first node satisfying
    ``goal``; ``allow`` optionally restricts which nodes may be entered."""
    parent = {start: -1}
    queue: deque[int] = deque([start])
    while queue:
        x = queue.popleft()
        for y in targets[x]:
            if y in parent:
                continue
            if allow is not None and not allow(y):
                continue
            parent[y] = x
            if goal(y):
                path = [y]
                while path[-1] != start:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            queue.append(y)
    return None


def _replacement_pairs(a: GraphAnalysis, ci: int, cj: int, label: EdgeLabel) -> list[Edge]:
    """Maximum matching of the reduced graph, in canonical indices."""
    t = a.t
    if label is EdgeLabel.LOWER:
        # one endpoint is uncovered; dropping the matched pair at the covered
        # endpoint is already optimal
        drop = ci if ci < t else cj
        assert drop < t, "edge joins two uncovered nodes; matching was not maximum"
        return [(k, k) for k in range(t) if k != drop]

    if label is EdgeLabel.TYPE1:
        if ci == cj:
            return [(k, k) for k in range(t) if k != ci]
        comp = a.scc.component
        cid = comp[ci]
        path = _bfs_path(
            a.h_targets, cj, lambda y: y == ci, allow=lambda y: comp[y] == cid
        )
        assert path is not None, "type 1 edge endpoints share no cycle"
        on_cycle = set(path)
        pairs: list[Edge] = [(k, k) for k in range(t) if k not in on_cycle]
        pairs.extend(zip(path, path[1:]))
        return pairs

    # type 2: complete the edge into an alternating path reaching an
    # uncovered node, then drop the edge itself from the matching it induces
    path = _bfs_path(a.lr_targets, cj, lambda y: y >= t)
    if path is not None:
        assert ci not in path, "reached the removed edge's own left index"
        used = {ci}
        used.update(p for p in path if p < t)
        pairs = [(k, k) for k in range(t) if k not in used]
        pairs.extend(zip(path, path[1:]))
        return pairs
    path = _bfs_path(a.rl_targets, ci, lambda y: y >= t)
    assert path is not None, "type 2 edge reaches no uncovered node"
    assert cj not in path, "reached the removed edge's own right index"
    used = {cj}
    used.update(p for p in path if p < t)
    pairs = [(k, k) for k in range(t) if k not in used]
    pairs.extend((b, aa) for aa, b in zip(path, path[1:]))
    return pairs


def remove_allowed_edge(s: DynamicState, e: Edge) -> DynamicState:
    """State for the graph without ``e``'s endpoints and their incident edges.

    ``e`` must currently be labeled allowed (:class:`EdgeNotAllowed`
    otherwise, :class:`EdgeAbsent` when it is no edge at all).  The new
    matching has size t - 1 and is maximum in the reduced graph; the new
    classification is recomputed in O(n + m).
    """
    g = s.graph
    k = g.edge_index.get(e)
    if k is None:
        raise EdgeAbsent(f"edge {e} is not in the graph")
    label = s.classification.labels[k]
    if not label.allowed:
        raise EdgeNotAllowed(f"edge {e} is not part of any maximum matching")

    a = s.analysis
    ci, cj = a.to_canonical(e)
    canonical_pairs = _replacement_pairs(a, ci, cj, label)
    assert len(canonical_pairs) == a.t - 1
    new_pairs = sorted(a.pair_from_canonical(x, y) for x, y in canonical_pairs)

    ei, ej = e
    reduced = BipartiteGraph(
        g.n1,
        g.n2,
        [
            (x, y)
            for x, y in zip(g.edge_lefts, g.edge_rights)
            if x != ei and y != ej
        ],
    )
    return initial_state(reduced, Matching(new_pairs))


def max_matching_after_removal_size(s: DynamicState, e: Edge) -> int:
    """Maximum-matching size of the reduced graph: always old t - 1."""
    k = s.graph.edge_index.get(e)
    if k is None:
        raise EdgeAbsent(f"edge {e} is not in the graph")
    if not s.classification.labels[k].allowed:
        raise EdgeNotAllowed(f"edge {e} is not part of any maximum matching")
    return s.matching.size - 1
