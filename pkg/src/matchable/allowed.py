"""Classify every edge by whether some maximum matching can use it.

Given any maximum matching ``M`` of size ``t``, the classifier relabels the
graph so the matched pairs sit on the diagonal and then answers three
questions in one O(n + m) pass:

* Edges touching a node ``M`` leaves uncovered are always usable: swapping
  such an edge for the matched edge at its covered endpoint yields another
  maximum matching (label ``LOWER``).
* Among edges between covered nodes, an edge ``(i, j)`` can appear in a
  maximum matching that stays inside the covered nodes exactly when
  ``i == j`` or the one-sided directed graph ``H`` has ``i`` and ``j`` in
  the same strongly connected component, i.e. the edge closes an
  alternating cycle (label ``TYPE1``).
* The remaining usable covered-covered edges are those lying on an
  alternating path that picks up one uncovered node at an end.  A node
  reachable in the left-to-right orientation ``H_LR`` from an uncovered
  left node makes all its out-edges usable, and symmetrically in the
  right-to-left orientation ``H_RL`` from the uncovered right nodes
  (label ``TYPE2`` when not already type 1).

Everything else is ``NOT_ALLOWED``.

The directed adjacency is held in flat compressed rows (one offsets array,
one targets array); that keeps million-edge classifications inside a small,
mostly sequential working set.  The :class:`DirectedView` objects with their
edge back-maps are materialised from it on first access.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from itertools import accumulate

from .errors import InvalidMatching, NotCanonicalPerfect
from .graph import (
    BipartiteGraph,
    CanonicalView,
    Edge,
    EdgeClassification,
    EdgeLabel,
    Matching,
    verify_matching,
)
from .matching import hopcroft_karp


@dataclass(frozen=True)
class DirectedView:
    """One-sided directed rendering of a bipartite graph.

    ``targets[x]`` lists directed successors of node ``x``; ``edge_ids[x]``
    holds, in parallel, the position of the originating bipartite edge.
    Orientations: ``"H"`` has the ``t`` matched indices as nodes and an edge
    ``i -> j`` for every off-diagonal edge between covered nodes; ``"H_LR"``
    has an edge ``i -> j`` for every bipartite edge ``(i, j)``; ``"H_RL"``
    has ``j -> i`` instead.
    """

    orientation: str
    node_count: int
    targets: list[list[int]]
    edge_ids: list[list[int]]

    @property
    def edge_count(self) -> int:
        return sum(len(lst) for lst in self.targets)


@dataclass(frozen=True)
class SccLabeling:
    """Component id per node; ids are dense in ``range(count)``."""

    component: list[int]
    count: int


def _csr(keys: list[int], values, n: int) -> tuple[list[int], list[int]]:
    """Group ``values`` by ``keys`` into offset + flat arrays, O(n + m)."""
    counts = Counter(keys)
    start = [0] * (n + 1)
    for key, c in counts.items():
        start[key + 1] = c
    start = list(accumulate(start))
    cursor = start[:-1]
    flat = [0] * len(keys)
    for key, val in zip(keys, values):
        p = cursor[key]
        flat[p] = val
        cursor[key] = p + 1
    return start, flat


def _flatten(rows: list[list[int]]) -> tuple[list[int], list[int]]:
    start = [0] * (len(rows) + 1)
    flat: list[int] = []
    extend = flat.extend
    for x, row in enumerate(rows):
        extend(row)
        start[x + 1] = len(flat)
    return start, flat


def _tarjan(start: list[int], flat: list[int], n: int) -> tuple[list[int], int]:
    """Strongly connected components over compressed rows.

    Iterative with an explicit stack of (node, resume position) so the
    recursion limit never binds; discovery bookkeeping happens at push time.
    """
    order = [-1] * n  # discovery order, -1 = unvisited
    low = [0] * n
    comp = [-1] * n
    on_stack = bytearray(n)
    scc_stack: list[int] = []
    v_stack: list[int] = []
    p_stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if order[root] != -1:
            continue
        v_stack.append(root)
        p_stack.append(start[root])
        order[root] = low[root] = counter
        counter += 1
        scc_stack.append(root)
        on_stack[root] = 1
        while v_stack:
            v = v_stack[-1]
            ptr = p_stack[-1]
            end = start[v + 1]
            lowv = low[v]
            descended = False
            while ptr < end:
                w = flat[ptr]
                ow = order[w]
                if ow == -1:
                    p_stack[-1] = ptr + 1
                    v_stack.append(w)
                    p_stack.append(start[w])
                    order[w] = low[w] = counter
                    counter += 1
                    scc_stack.append(w)
                    on_stack[w] = 1
                    descended = True
                    break
                if on_stack[w] and ow < lowv:
                    lowv = ow
                ptr += 1
            low[v] = lowv
            if descended:
                continue
            v_stack.pop()
            p_stack.pop()
            if lowv == order[v]:
                while True:
                    w = scc_stack.pop()
                    on_stack[w] = 0
                    comp[w] = ncomp
                    if w == v:
                        break
                ncomp += 1
            elif v_stack:
                parent = v_stack[-1]
                if lowv < low[parent]:
                    low[parent] = lowv
    return comp, ncomp


def tarjan_scc(view: DirectedView) -> SccLabeling:
    """Strongly connected components of a directed view; linear, iterative."""
    start, flat = _flatten(view.targets)
    comp, count = _tarjan(start, flat, view.node_count)
    return SccLabeling(comp, count)


def _reachable(start: list[int], flat: list[int], sources, n: int) -> bytearray:
    """Nodes reachable from ``sources`` (which count as reached) by BFS."""
    seen = bytearray(n)
    queue: deque[int] = deque()
    for s in sources:
        seen[s] = 1
        queue.append(s)
    while queue:
        x = queue.popleft()
        for y in flat[start[x] : start[x + 1]]:
            if not seen[y]:
                seen[y] = 1
                queue.append(y)
    return seen


class GraphAnalysis:
    """Everything one classification pass derives, kept for reuse.

    The dynamic-update module feeds its path searches from the retained
    adjacency instead of rebuilding it.  ``swapped`` records whether the two
    parts were exchanged to honour the internal n1 <= n2 convention; the
    translation helpers below hide that from callers.  The three directed
    views share one edge back-map, built on first access because plain
    classification never touches it.
    """

    __slots__ = (
        "graph",
        "matching",
        "swapped",
        "view",
        "t",
        "n1w",
        "n2w",
        "canon_left",
        "canon_right",
        "lr_start",
        "lr_flat",
        "rl_start",
        "rl_flat",
        "h_start",
        "h_flat",
        "scc",
        "classification",
        "_rows",
        "_views",
    )

    def __init__(
        self,
        graph: BipartiteGraph,
        matching: Matching,
        swapped: bool,
        view: CanonicalView,
        canon_left: list[int],
        canon_right: list[int],
        lr: tuple[list[int], list[int]],
        rl: tuple[list[int], list[int]],
        h: tuple[list[int], list[int]],
        scc: SccLabeling,
        classification: EdgeClassification,
    ):
        self.graph = graph
        self.matching = matching
        self.swapped = swapped
        self.view = view
        self.t = view.t
        self.n1w = len(view.left_perm)
        self.n2w = len(view.right_perm)
        self.canon_left = canon_left
        self.canon_right = canon_right
        self.lr_start, self.lr_flat = lr
        self.rl_start, self.rl_flat = rl
        self.h_start, self.h_flat = h
        self.scc = scc
        self.classification = classification
        self._rows: dict[str, list[list[int]]] = {}
        self._views: dict[str, DirectedView] | None = None

    def to_canonical(self, e: Edge) -> Edge:
        i, j = (e[1], e[0]) if self.swapped else e
        return (self.view.left_perm[i], self.view.right_perm[j])

    def pair_from_canonical(self, a: int, b: int) -> Edge:
        i = self.view.inv_left[a]
        j = self.view.inv_right[b]
        return (j, i) if self.swapped else (i, j)

    def _row_split(self, start: list[int], flat: list[int]) -> list[list[int]]:
        return [flat[start[x] : start[x + 1]] for x in range(len(start) - 1)]

    @property
    def h_targets(self) -> list[list[int]]:
        if "h" not in self._rows:
            self._rows["h"] = self._row_split(self.h_start, self.h_flat)
        return self._rows["h"]

    @property
    def lr_targets(self) -> list[list[int]]:
        if "lr" not in self._rows:
            self._rows["lr"] = self._row_split(self.lr_start, self.lr_flat)
        return self._rows["lr"]

    @property
    def rl_targets(self) -> list[list[int]]:
        if "rl" not in self._rows:
            self._rows["rl"] = self._row_split(self.rl_start, self.rl_flat)
        return self._rows["rl"]

    def _build_views(self) -> dict[str, DirectedView]:
        if self._views is None:
            t = self.t
            mcount = len(self.canon_left)
            _, lr_id_flat = _csr(self.canon_left, range(mcount), self.n2w)
            _, rl_id_flat = _csr(self.canon_right, range(mcount), self.n2w)
            lr_ids = self._row_split(self.lr_start, lr_id_flat)
            rl_ids = self._row_split(self.rl_start, rl_id_flat)
            h_ids = [
                [k for cj, k in zip(row, ids) if cj < t and cj != ci]
                for ci, (row, ids) in enumerate(
                    zip(self.lr_targets[:t], lr_ids[:t])
                )
            ]
            self._views = {
                "H": DirectedView("H", t, self.h_targets, h_ids),
                "H_LR": DirectedView("H_LR", self.n2w, self.lr_targets, lr_ids),
                "H_RL": DirectedView("H_RL", self.n2w, self.rl_targets, rl_ids),
            }
        return self._views

    @property
    def h(self) -> DirectedView:
        return self._build_views()["H"]

    @property
    def h_lr(self) -> DirectedView:
        return self._build_views()["H_LR"]

    @property
    def h_rl(self) -> DirectedView:
        return self._build_views()["H_RL"]


def analyze(g: BipartiteGraph, m: Matching) -> GraphAnalysis:
    """Run the full classification and keep the derived structures.

    ``m`` must be a maximum matching; only its being a matching at all is
    checked (:class:`InvalidMatching`), a non-maximum one silently yields a
    wrong classification.
    """
    if not verify_matching(g, m):
        raise InvalidMatching("the supplied pairs are not a matching of this graph")
    swapped = g.n1 > g.n2
    t = m.size
    if swapped:
        n1, n2 = g.n2, g.n1
        pair_list = [(j, i) for i, j in m.pairs]
    else:
        n1, n2 = g.n1, g.n2
        pair_list = m.pairs

    left_perm = [-1] * n1
    right_perm = [-1] * n2
    for k, (i, j) in enumerate(pair_list):
        left_perm[i] = k
        right_perm[j] = k
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
    view = CanonicalView(tuple(left_perm), tuple(right_perm), t)

    if swapped:
        canon_left = [left_perm[j] for j in g.edge_rights]
        canon_right = [right_perm[i] for i in g.edge_lefts]
    else:
        canon_left = [left_perm[i] for i in g.edge_lefts]
        canon_right = [right_perm[j] for j in g.edge_rights]

    lr = _csr(canon_left, canon_right, n2)
    rl = _csr(canon_right, canon_left, n2)

    # H = restriction of H_LR to the covered indices, minus self-loops
    lr_start, lr_flat = lr
    h_start = [0] * (t + 1)
    h_flat: list[int] = []
    extend = h_flat.extend
    for ci in range(t):
        row = lr_flat[lr_start[ci] : lr_start[ci + 1]]
        extend([cj for cj in row if cj < t and cj != ci])
        h_start[ci + 1] = len(h_flat)
    comp, ncomp = _tarjan(h_start, h_flat, t)

    reach_lr = _reachable(lr_start, lr_flat, range(t, n1), n2)
    rl_start, rl_flat = rl
    reach_rl = _reachable(rl_start, rl_flat, range(t, n2), n2)

    not_allowed = EdgeLabel.NOT_ALLOWED
    lower = EdgeLabel.LOWER
    type1 = EdgeLabel.TYPE1
    type2 = EdgeLabel.TYPE2
    # reach_lr/reach_rl: an out-edge of a node on an alternating path from
    # an uncovered node is itself on such a path
    labels = [
        lower
        if (ci >= t or cj >= t)
        else type1
        if (ci == cj or comp[ci] == comp[cj])
        else type2
        if (reach_lr[ci] or reach_rl[cj])
        else not_allowed
        for ci, cj in zip(canon_left, canon_right)
    ]

    classification = EdgeClassification(g, labels)
    return GraphAnalysis(
        g,
        m,
        swapped,
        view,
        canon_left,
        canon_right,
        lr,
        rl,
        (h_start, h_flat),
        SccLabeling(comp, ncomp),
        classification,
    )


def classify_general(g: BipartiteGraph, m: Matching) -> EdgeClassification:
    """Label every edge of ``g`` given the maximum matching ``m``; O(n + m)."""
    return analyze(g, m).classification


def classify_perfect(g: BipartiteGraph) -> EdgeClassification:
    """Labels for a canonical balanced graph whose diagonal is a perfect matching.

    Requires ``n1 == n2`` and every ``(i, i)`` present
    (:class:`NotCanonicalPerfect` otherwise).  An edge is usable exactly when
    it is matched or closes an alternating cycle, i.e. joins two nodes of one
    strongly connected component of ``H``; labels are ``TYPE1`` or
    ``NOT_ALLOWED`` only.
    """
    t = g.n1
    if g.n2 != t:
        raise NotCanonicalPerfect(f"parts differ in size: {g.n1} vs {g.n2}")
    diagonal = bytearray(t)
    h_rows: list[list[int]] = [[] for _ in range(t)]
    for i, j in zip(g.edge_lefts, g.edge_rights):
        if i == j:
            diagonal[i] = 1
        else:
            h_rows[i].append(j)
    for i in range(t):
        if not diagonal[i]:
            raise NotCanonicalPerfect(f"matched edge ({i}, {i}) is missing")
    comp, _ = _tarjan(*_flatten(h_rows), t)
    type1 = EdgeLabel.TYPE1
    not_allowed = EdgeLabel.NOT_ALLOWED
    labels = [
        type1 if i == j or comp[i] == comp[j] else not_allowed
        for i, j in zip(g.edge_lefts, g.edge_rights)
    ]
    return EdgeClassification(g, labels)


def classify_all(g: BipartiteGraph) -> tuple[Matching, EdgeClassification]:
    """Find a maximum matching, then classify every edge with it."""
    m = hopcroft_karp(g)
    return m, classify_general(g, m)
