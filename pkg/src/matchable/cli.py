"""Command-line front door.

Exit codes: 0 success, 1 parse/validation errors, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from .allowed import classify_all, classify_general
from .errors import MatchableError, NotRegular
from .extensions import decompose_regular, extension_bound, extend_partial_matching, is_regular
from .generate import random_bipartite_m
from .graph import Matching, verify_matching
from .io import format_classification, read_graph
from .matching import has_augmenting_path, hopcroft_karp
from .oracle import brute_force_allowed


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for verification
    # mismatches here, so remap
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load(path: str):
    try:
        return read_graph(path)
    except OSError as exc:
        raise MatchableError(f"cannot read {path}: {exc}") from None


def _file_matching(g, m, probe_maximality: bool = True) -> Matching:
    if m is None:
        raise MatchableError("--matching-from-file given but the file has no 'm' lines")
    if not verify_matching(g, m):
        raise MatchableError("the 'm' lines do not form a matching of the graph")
    if probe_maximality and has_augmenting_path(g, m):
        raise MatchableError("the 'm' lines form a matching that is not maximum")
    return m


def cmd_matching(args) -> int:
    g, _ = _load(args.file)
    m = hopcroft_karp(g)
    for i, j in m.pairs:
        print(f"{i + 1} {j + 1}")
    print(f"t {m.size}")
    return 0


def cmd_classify(args) -> int:
    g, m = _load(args.file)
    if args.matching_from_file:
        m = _file_matching(g, m)
        cls = classify_general(g, m)
    else:
        m, cls = classify_all(g)
    sys.stdout.write(format_classification(cls, m.size))
    return 0


def cmd_verify(args) -> int:
    g, _ = _load(args.file)
    _, cls = classify_all(g)
    truth = brute_force_allowed(g)
    mismatches = [
        (e, label)
        for e, label in cls
        if label.allowed != (e in truth)
    ]
    if mismatches:
        for (i, j), label in mismatches:
            expected = "allowed" if (i, j) in truth else "not_allowed"
            print(f"mismatch {i + 1} {j + 1} classified={label.value} oracle={expected}")
        return 2
    print(f"ok {g.m} edges, {len(truth)} allowed")
    return 0


def cmd_decompose(args) -> int:
    g, _ = _load(args.file)
    d = is_regular(g)
    if d is None:
        # let the operation name the first offender
        probe = len(g.adj_left[0]) if g.n1 else 0
        decompose_regular(g, probe)
        raise NotRegular("graph is not regular")
    parts = decompose_regular(g, d)
    print(f"d {d}")
    for k, mk in enumerate(parts, start=1):
        for i, j in mk.pairs:
            print(f"{k} {i + 1} {j + 1}")
    return 0


def cmd_extend(args) -> int:
    g, m = _load(args.file)
    if args.matching_from_file:
        m = _file_matching(g, m)
    else:
        m = hopcroft_karp(g)
    try:
        p = [
            (int(a) - 1, int(b) - 1)
            for pair_arg in args.edges
            for a, b in [pair_arg.split(",")]
        ]
    except ValueError:
        raise MatchableError("--edges expects pairs like '1,2 3,4'") from None
    result = extend_partial_matching(g, m, p)
    for i, j in result.pairs:
        print(f"{i + 1} {j + 1}")
    print(f"size {result.size}")
    print(f"bound {extension_bound(g, m, p)}")
    return 0


def cmd_bench(args) -> int:
    rng = random.Random(args.seed)
    n1 = args.n // 2
    g = random_bipartite_m(n1, args.n - n1, args.m, rng)
    t0 = time.perf_counter()
    m = hopcroft_karp(g)
    t1 = time.perf_counter()
    classify_general(g, m)
    t2 = time.perf_counter()
    print("n,m,t,matching_ms,classify_ms")
    print(f"{args.n},{args.m},{m.size},{(t1 - t0) * 1000:.3f},{(t2 - t1) * 1000:.3f}")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matchable", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("matching", help="print a maximum matching of a graph file")
    p.add_argument("file")
    p.set_defaults(func=cmd_matching)

    p = sub.add_parser("classify", help="label every edge of a graph file")
    p.add_argument("file")
    p.add_argument(
        "--matching-from-file",
        action="store_true",
        help="trust the file's 'm' lines (validated) instead of computing a matching",
    )
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="diff the classification against the brute-force oracle")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="split a regular graph into perfect matchings")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("extend", help="extend non-adjacent edges with untouched matched pairs")
    p.add_argument("file")
    p.add_argument("--edges", nargs="+", required=True, metavar="I,J")
    p.add_argument("--matching-from-file", action="store_true")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("bench", help="time matching and classification on a random graph")
    p.add_argument("--n", type=int, required=True, help="total node count")
    p.add_argument("--m", type=int, required=True, help="edge count")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("serve", help="run the domino game HTTP service")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatchableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
