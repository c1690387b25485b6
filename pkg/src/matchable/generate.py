"""Random instance generators shared by the tests and the bench subcommand."""

from __future__ import annotations

import random

from .graph import BipartiteGraph


def random_bipartite_m(n1: int, n2: int, m: int, rng: random.Random) -> BipartiteGraph:
    """Uniform graph with exactly ``m`` distinct edges."""
    total = n1 * n2
    if m > total:
        raise ValueError(f"cannot place {m} distinct edges in a {n1}x{n2} grid")
    picks = rng.sample(range(total), m)
    return BipartiteGraph(n1, n2, [(q // n2, q % n2) for q in picks])


def random_bipartite_p(n1: int, n2: int, p: float, rng: random.Random) -> BipartiteGraph:
    """Graph where each of the ``n1 * n2`` possible edges appears with probability ``p``."""
    edges = [
        (i, j) for i in range(n1) for j in range(n2) if rng.random() < p
    ]
    return BipartiteGraph(n1, n2, edges)


def random_regular(n: int, d: int, rng: random.Random) -> BipartiteGraph:
    """d-regular graph on n + n nodes: the union of d disjoint random permutations.

    Resamples until the permutations do not collide, which is quick at the
    small sizes this is used for.
    """
    if d > n:
        raise ValueError(f"degree {d} impossible with {n} nodes per side")
    while True:
        edges = {
            (i, p[i]) for _ in range(d) for p in [rng.sample(range(n), n)] for i in range(n)
        }
        if len(edges) == n * d:
            return BipartiteGraph(n, n, sorted(edges))
