"""Line-oriented text formats: graph files and classification listings.

Graph file format (everything 1-based):

    c <comment>          ignored
    p bpm <n1> <n2> <m>  exactly one header, first non-comment line
    e <i> <j>            edge, exactly m of them
    m <i> <j>            optional known matching edge

Unknown tags are errors; blank lines are skipped.
"""

from __future__ import annotations

from .errors import GraphFormatError
from .graph import BipartiteGraph, EdgeClassification, Matching, build_graph


def parse_graph(text: str) -> tuple[BipartiteGraph, Matching | None]:
    header: tuple[int, int, int] | None = None
    edges: list[tuple[int, int]] = []
    matched: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split()
        if not fields:
            continue
        tag = fields[0]
        if tag == "c":
            continue
        if tag == "p":
            if header is not None:
                raise GraphFormatError(f"line {lineno}: second 'p' header")
            if len(fields) != 5 or fields[1] != "bpm":
                raise GraphFormatError(f"line {lineno}: expected 'p bpm <n1> <n2> <m>'")
            try:
                header = (int(fields[2]), int(fields[3]), int(fields[4]))
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer header field") from None
            continue
        if header is None:
            raise GraphFormatError(f"line {lineno}: '{tag}' line before the 'p bpm' header")
        if tag in ("e", "m"):
            if len(fields) != 3:
                raise GraphFormatError(f"line {lineno}: expected '{tag} <i> <j>'")
            try:
                i, j = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer endpoint") from None
            if i < 1 or j < 1:
                raise GraphFormatError(f"line {lineno}: endpoints are 1-based")
            (edges if tag == "e" else matched).append((i - 1, j - 1))
        else:
            raise GraphFormatError(f"line {lineno}: unknown tag {tag!r}")
    if header is None:
        raise GraphFormatError("missing 'p bpm' header")
    n1, n2, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} 'e' lines found")
    g = build_graph(n1, n2, edges)
    return g, (Matching(matched) if matched else None)


def read_graph(path: str) -> tuple[BipartiteGraph, Matching | None]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: BipartiteGraph, m: Matching | None = None) -> str:
    lines = [f"p bpm {g.n1} {g.n2} {g.m}"]
    lines.extend(f"e {i + 1} {j + 1}" for i, j in g.edges)
    if m is not None:
        lines.extend(f"m {i + 1} {j + 1}" for i, j in m.pairs)
    return "\n".join(lines) + "\n"


def format_classification(cls: EdgeClassification, t: int) -> str:
    """One line per edge in input order, then a summary line."""
    lines = [
        f"{i + 1} {j + 1} {label.value}"
        for (i, j), label in zip(cls.graph.edges, cls.labels)
    ]
    lines.append(f"s allowed {cls.allowed_count} matching {t}")
    return "\n".join(lines) + "\n"
