"""Maximum-cardinality matching via Hopcroft-Karp, plus small helpers.

All traversals are iterative with explicit queues and stacks; recursion
depth never grows with the graph, so million-node inputs are fine.
Neighbours are always scanned in ascending index order, which makes every
result deterministic.
"""

from __future__ import annotations

from collections import deque

from .graph import BipartiteGraph, Matching


def _greedy_pairs(g: BipartiteGraph) -> tuple[list[int], list[int]]:
    pair_left = [-1] * g.n1
    pair_right = [-1] * g.n2
    for u in range(g.n1):
        for v in g.adj_left[u]:
            if pair_right[v] == -1:
                pair_left[u] = v
                pair_right[v] = u
                break
    return pair_left, pair_right


def greedy_maximal(g: BipartiteGraph) -> Matching:
    """First-fit maximal matching; used as a warm start, never as an answer."""
    pair_left, _ = _greedy_pairs(g)
    return Matching((u, v) for u, v in enumerate(pair_left) if v != -1)


def hopcroft_karp(g: BipartiteGraph) -> Matching:
    """Maximum-cardinality matching in O(sqrt(n) * m).

    Each phase runs a layered BFS from the free left nodes and then augments
    along a maximal set of vertex-disjoint shortest augmenting paths, found
    by a depth-first search with per-node resume pointers.  Left nodes on an
    augmented path are retired from the phase (their layer is set to
    infinity), which keeps the paths disjoint and the phase linear.
    """
    n1, n2 = g.n1, g.n2
    adj = g.adj_left
    pair_left, pair_right = _greedy_pairs(g)
    INF = n1 + n2 + 1
    dist = [0] * n1
    queue: deque[int] = deque()

    while True:
        # layered BFS from the free left nodes; `goal` becomes the length of
        # the shortest augmenting path, or stays INF when none exists
        queue.clear()
        for u in range(n1):
            if pair_left[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        goal = INF
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du >= goal:
                continue
            for v in adj[u]:
                w = pair_right[v]
                if w == -1:
                    if goal == INF:
                        goal = du + 1
                elif dist[w] == INF:
                    dist[w] = du + 1
                    queue.append(w)
        if goal == INF:
            break

        # depth-first augmentation with current-arc pointers
        ptr = [0] * n1
        for root in range(n1):
            if pair_left[root] != -1:
                continue
            stack = [root]
            via: list[int] = []  # right node linking stack[k] to stack[k+1]
            while stack:
                u = stack[-1]
                du = dist[u]
                lst = adj[u]
                end = len(lst)
                i = ptr[u]
                advanced = False
                while i < end:
                    v = lst[i]
                    i += 1
                    w = pair_right[v]
                    if w == -1:
                        if du + 1 == goal:
                            via.append(v)
                            for uu, vv in zip(stack, via):
                                pair_left[uu] = vv
                                pair_right[vv] = uu
                                dist[uu] = INF  # retire the path this phase
                            ptr[u] = i
                            stack.clear()
                            via.clear()
                            advanced = True
                            break
                    elif dist[w] == du + 1:
                        ptr[u] = i
                        via.append(v)
                        stack.append(w)
                        advanced = True
                        break
                if not advanced:
                    ptr[u] = i
                    dist[u] = INF
                    stack.pop()
                    if via:
                        via.pop()

    return Matching((u, v) for u, v in enumerate(pair_left) if v != -1)


def has_augmenting_path(g: BipartiteGraph, m: Matching) -> bool:
    """True iff ``m`` can be enlarged, i.e. it is not maximum in ``g``.

    One alternating BFS from the free left nodes; O(n + m).
    """
    right_partner = m.right_partner
    seen = bytearray(g.n2)
    queue: deque[int] = deque(u for u in range(g.n1) if u not in m.left_partner)
    while queue:
        u = queue.popleft()
        for v in g.adj_left[u]:
            if not seen[v]:
                seen[v] = 1
                w = right_partner.get(v, -1)
                if w == -1:
                    return True
                queue.append(w)
    return False
