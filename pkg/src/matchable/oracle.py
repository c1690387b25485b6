"""Exhaustive ground truth for small graphs.

Everything here explores the full matching space by brute force, so it is
deliberately independent of the fast pipeline and only usable up to roughly
14-16 nodes.  Tests diff the fast results against these.
"""

from __future__ import annotations

from .errors import TooLarge
from .graph import BipartiteGraph, Edge, Matching

DEFAULT_NODE_CAP = 16


def _require_small(g: BipartiteGraph, cap: int) -> None:
    if g.n > cap:
        raise TooLarge(f"graph has {g.n} nodes, oracle cap is {cap}")


def _adj_masks(g: BipartiteGraph) -> list[int]:
    masks = []
    for neighbours in g.adj_left:
        m = 0
        for j in neighbours:
            m |= 1 << j
        masks.append(m)
    return masks


def _max_size(adj_masks: list[int], skip_left: int = -1, blocked: int = 0) -> int:
    # subset dynamic program: the set of right-side masks reachable by
    # matching a prefix of the left nodes
    reachable = {0}
    for i, am in enumerate(adj_masks):
        if i == skip_left:
            continue
        am &= ~blocked
        if not am:
            continue
        extra = set()
        for used in reachable:
            avail = am & ~used
            while avail:
                bit = avail & -avail
                avail -= bit
                extra.add(used | bit)
        reachable |= extra
    return max(mask.bit_count() for mask in reachable)


def brute_force_max_matching(g: BipartiteGraph, cap: int = DEFAULT_NODE_CAP) -> int:
    """Exact maximum-matching size by exhausting the right-side subsets."""
    _require_small(g, cap)
    return _max_size(_adj_masks(g))


def brute_force_allowed(g: BipartiteGraph, cap: int = DEFAULT_NODE_CAP) -> set[Edge]:
    """Edges contained in some maximum matching, straight from the definition.

    An edge qualifies exactly when deleting both its endpoints shrinks the
    maximum matching by exactly one.
    """
    _require_small(g, cap)
    masks = _adj_masks(g)
    base = _max_size(masks)
    out: set[Edge] = set()
    for i, j in g.edges:
        if _max_size(masks, skip_left=i, blocked=1 << j) + 1 == base:
            out.add((i, j))
    return out


def enumerate_maximum_matchings(
    g: BipartiteGraph, cap: int = DEFAULT_NODE_CAP
) -> list[Matching]:
    """Every maximum matching, by backtracking over the left nodes."""
    _require_small(g, cap)
    target = brute_force_max_matching(g, cap)
    n1 = g.n1
    adj = g.adj_left
    out: list[Matching] = []
    chosen: list[Edge] = []

    def walk(i: int, used: int, need: int) -> None:
        if need > n1 - i:
            return
        if i == n1:
            out.append(Matching(chosen))
            return
        walk(i + 1, used, need)
        for j in adj[i]:
            bit = 1 << j
            if not used & bit:
                chosen.append((i, j))
                walk(i + 1, used | bit, need - 1)
                chosen.pop()

    walk(0, 0, target)
    return out
