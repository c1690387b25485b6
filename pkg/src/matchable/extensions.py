"""Growing an independent edge set into a large matching, and peeling
regular graphs into perfect matchings."""

from __future__ import annotations

from typing import Iterable

from .errors import EdgeAbsent, NotAMatching, NotNonAdjacent, NotRegular
from .graph import BipartiteGraph, CanonicalView, Edge, Matching, verify_matching
from .matching import hopcroft_karp


def extend_partial_matching(
    g: BipartiteGraph, m: Matching, p: Iterable[Edge]
) -> Matching:
    """Extend the independent edge set ``p`` with untouched pairs of ``m``.

    With ``m`` a maximum matching of size ``t`` and ``p`` a set of ``k``
    pairwise non-adjacent edges, the result is ``p`` plus every matched pair
    whose index (after moving ``m`` onto the diagonal) collides with no
    endpoint of ``p``.  Its size is exactly ``k + |B|`` where ``B`` is that
    untouched index set, which is at least ``k + t - |A ∪ A'|`` and hence at
    least ``t - k``.
    """
    if not verify_matching(g, m):
        raise NotAMatching("the supplied pairs are not a matching of this graph")
    pairs = [(i, j) for i, j in p]
    lefts = set()
    rights = set()
    for i, j in pairs:
        if not g.has_edge(i, j):
            raise EdgeAbsent(f"edge ({i}, {j}) is not in the graph")
        if i in lefts or j in rights:
            raise NotNonAdjacent(f"edge ({i}, {j}) shares a node with another edge of the set")
        lefts.add(i)
        rights.add(j)

    view = CanonicalView.for_matching(g.n1, g.n2, m)
    touched = {view.left_perm[i] for i in lefts}
    touched.update(view.right_perm[j] for j in rights)
    extension = [
        view.from_canonical_edge((k, k)) for k in range(view.t) if k not in touched
    ]
    return Matching(sorted(pairs + extension))


def extension_bound(g: BipartiteGraph, m: Matching, p: Iterable[Edge]) -> int:
    """The guaranteed size ``k + t - |A ∪ A'|`` for the same arguments."""
    pairs = [(i, j) for i, j in p]
    view = CanonicalView.for_matching(g.n1, g.n2, m)
    touched = {view.left_perm[i] for i, _ in pairs}
    touched.update(view.right_perm[j] for _, j in pairs)
    return len(pairs) + m.size - len(touched)


def is_regular(g: BipartiteGraph) -> int | None:
    """The common node degree when one exists, else ``None``.

    The empty graph counts as 0-regular.
    """
    if g.n1 == 0 and g.n2 == 0:
        return 0
    degrees = {len(lst) for lst in g.adj_left}
    degrees.update(len(lst) for lst in g.adj_right)
    if len(degrees) != 1:
        return None
    return degrees.pop()


def decompose_regular(g: BipartiteGraph, d: int) -> list[Matching]:
    """Split a d-regular graph into ``d`` disjoint perfect matchings.

    Repeatedly finds a perfect matching and deletes it; each residual graph
    is regular of one degree less, so by the marriage theorem a perfect
    matching keeps existing until the edges run out.  The union of the
    results is exactly the edge set.
    """
    for side, adj, count in (("left", g.adj_left, g.n1), ("right", g.adj_right, g.n2)):
        for node in range(count):
            if len(adj[node]) != d:
                raise NotRegular(
                    f"{side} node {node} has degree {len(adj[node])}, expected {d}"
                )
    if d == 0:
        return []
    # d >= 1 forces n1 == n2 (both parts carry m/d nodes)
    rounds: list[Matching] = []
    residual = g
    for _ in range(d):
        mk = hopcroft_karp(residual)
        assert mk.size == g.n1, "residual regular graph lost its perfect matching"
        rounds.append(mk)
        taken = mk.as_set()
        residual = BipartiteGraph(
            residual.n1, residual.n2, [e for e in residual.edges if e not in taken]
        )
    return rounds
