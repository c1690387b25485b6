"""Bipartite matching toolkit: which edges can a maximum matching use.

Given any one maximum matching, every edge of a bipartite graph is labeled
in O(n + m) as usable by some maximum matching or not, with the usable ones
split into matched-side and uncovered-side kinds.  On top of that sit
dynamic endpoint removals, matching extension and regular-graph
decomposition helpers, a brute-force oracle for testing, a CLI, and a
domino-tiling game service.
"""

from .allowed import (
    DirectedView,
    GraphAnalysis,
    SccLabeling,
    analyze,
    classify_all,
    classify_general,
    classify_perfect,
    tarjan_scc,
)
from .dynamic import (
    DynamicState,
    initial_state,
    max_matching_after_removal_size,
    remove_allowed_edge,
)
from .errors import MatchableError
from .extensions import decompose_regular, extend_partial_matching, is_regular
from .graph import (
    BipartiteGraph,
    CanonicalView,
    EdgeClassification,
    EdgeLabel,
    Matching,
    build_graph,
    canonicalize,
    verify_matching,
)
from .matching import greedy_maximal, has_augmenting_path, hopcroft_karp

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "CanonicalView",
    "DirectedView",
    "DynamicState",
    "EdgeClassification",
    "EdgeLabel",
    "GraphAnalysis",
    "Matching",
    "MatchableError",
    "SccLabeling",
    "analyze",
    "build_graph",
    "canonicalize",
    "classify_all",
    "classify_general",
    "classify_perfect",
    "decompose_regular",
    "extend_partial_matching",
    "greedy_maximal",
    "has_augmenting_path",
    "hopcroft_karp",
    "initial_state",
    "is_regular",
    "max_matching_after_removal_size",
    "remove_allowed_edge",
    "tarjan_scc",
    "verify_matching",
]
