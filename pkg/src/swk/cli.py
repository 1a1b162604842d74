"""Command-line surface.

Subcommands:

* ``swk index``      -- Wiener / Steiner k-Wiener indices of one graph
* ``swk structure``  -- modular/median flags, triple counts, block data
* ``swk verify``     -- run a verification suite against brute force

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 precondition
violation (disconnected input, out-of-range parameters).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .bitset import bit_list
from .blocks import block_decomposition, is_block_graph, nm_block_graph, sw3_block_formula
from .errors import ParseError, PreconditionError
from .graphs import (
    FAMILY_NAMES,
    FamilySpec,
    Graph,
    is_connected,
    make_family,
    parse_edgelist,
    parse_graph6,
)
from .metric import all_pairs_distances, average_distance, wiener_index
from .report import Report
from .steiner import mean_steiner, steiner_wiener
from .structure import classify_triples
from .verify import SUITE_NAMES, run_suite

_FAMILY_ALIASES = {"fibonacci": "fibonacci_cube", "lucas": "lucas_cube"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swk",
        description="Exact Steiner distances, Steiner k-Wiener indices, and "
        "graph structure recognition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--input", metavar="PATH", help="edge list or graph6 file ('-' for stdin)")
    source.add_argument(
        "--family",
        choices=sorted(set(FAMILY_NAMES) | set(_FAMILY_ALIASES)),
        help="generate a standard family instead of reading a file",
    )
    source.add_argument("-n", type=int, default=None, help="family parameter")
    source.add_argument("-m", type=int, default=None, help="second family parameter")
    source.add_argument(
        "--format",
        choices=("edgelist", "graph6"),
        default=None,
        help="input format (default: by file extension, else edgelist)",
    )

    output = argparse.ArgumentParser(add_help=False)
    fmt = output.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit a JSON report")
    fmt.add_argument("--plain", action="store_true", help="emit plain text (default)")
    output.add_argument(
        "--threads",
        type=int,
        default=0,
        help="worker count (0 = auto); execution is single-threaded and "
        "deterministic either way",
    )
    output.add_argument("--seed", type=int, default=42, help="seed for randomized suites")

    p_index = sub.add_parser("index", parents=[source, output],
                             help="compute W, SW_k, mu, mu_k")
    p_index.add_argument("-k", type=int, default=3, help="subset size (default 3)")

    sub.add_parser("structure", parents=[source, output],
                   help="modular/median flags, triple counts, blocks")

    p_verify = sub.add_parser("verify", parents=[output],
                              help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITE_NAMES)
    p_verify.add_argument("--count", type=int, default=None, help="instances to draw")
    p_verify.add_argument("--max-n", type=int, default=None, help="largest instance size")
    p_verify.add_argument("--max-size", type=int, default=None,
                          help="largest product size (products suite)")
    p_verify.add_argument("--wiener-max-n", type=int, default=None,
                          help="largest cube order for the Wiener cross-check")
    p_verify.add_argument("--k-cap", type=int, default=None,
                          help="largest subset size (bounds suite)")
    p_verify.add_argument("--corpus", metavar="PATH", default=None,
                          help="graph6 corpus file (modular-bound suite)")
    return parser


def _read_source(args) -> str:
    if args.input == "-":
        return sys.stdin.read()
    try:
        return Path(args.input).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {args.input}: {exc}") from None


def _load_graph(args) -> Graph:
    if (args.input is None) == (args.family is None):
        raise ParseError("exactly one of --input or --family is required")
    if args.family is not None:
        if args.n is None:
            raise ParseError("--family requires -n")
        name = _FAMILY_ALIASES.get(args.family, args.family)
        return make_family(FamilySpec(name, args.n, args.m))
    text = _read_source(args)
    fmt = args.format
    if fmt is None:
        fmt = "graph6" if args.input.endswith(".g6") else "edgelist"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ParseError("empty graph6 input")
        return parse_graph6(lines[0])
    return parse_edgelist(text)


def _graph_summary(G: Graph) -> dict:
    return {"n": G.n, "m": G.m, "connected": is_connected(G)}


def cmd_index(args) -> Report:
    report = Report()
    t0 = time.perf_counter()
    G = _load_graph(args)
    report.timing_ms["build"] = (time.perf_counter() - t0) * 1000.0
    report.graph = _graph_summary(G)
    k = args.k
    t0 = time.perf_counter()
    D = all_pairs_distances(G)
    report.timing_ms["distances"] = (time.perf_counter() - t0) * 1000.0
    t0 = time.perf_counter()
    report.add_result("wiener", wiener_index(G, dist=D))
    report.add_result(f"steiner_wiener_k{k}", steiner_wiener(G, k, dist=D))
    if G.n >= 2:
        report.add_result("mean_distance", average_distance(G, dist=D))
    if G.n >= k:
        report.add_result(f"mean_steiner_k{k}", mean_steiner(G, k, dist=D))
    report.timing_ms["indices"] = (time.perf_counter() - t0) * 1000.0
    return report


def cmd_structure(args) -> Report:
    report = Report()
    t0 = time.perf_counter()
    G = _load_graph(args)
    report.timing_ms["build"] = (time.perf_counter() - t0) * 1000.0
    report.graph = _graph_summary(G)
    t0 = time.perf_counter()
    D = all_pairs_distances(G)
    report.timing_ms["distances"] = (time.perf_counter() - t0) * 1000.0
    t0 = time.perf_counter()
    if G.n >= 3:
        cls = classify_triples(G, dist=D)
        report.add_flag("modular", cls.nonmodular == 0)
        report.add_flag("median", cls.nonmodular == 0 and cls.median_unique)
        report.add_result("triples", cls.total)
        report.add_result("nonmodular_triples", cls.nonmodular)
    decomp = block_decomposition(G)
    report.add_result("blocks", len(decomp.blocks))
    report.add_result("cut_vertices", len(bit_list(decomp.cut_vertices)))
    block_graph = is_block_graph(G, decomp)
    report.add_flag("block_graph", block_graph)
    if block_graph and G.n >= 3:
        nm = nm_block_graph(G, decomp)
        doubled = sw3_block_formula(G, decomp, dist=D)
        if doubled % 2:
            raise AssertionError("doubled block formula value is odd")
        report.add_result("nonmodular_triples_blockwise", nm)
        report.add_result("sw3_block_formula", doubled // 2)
    report.timing_ms["structure"] = (time.perf_counter() - t0) * 1000.0
    return report


def cmd_verify(args) -> Report:
    corpus = None
    if args.corpus is not None:
        try:
            corpus = Path(args.corpus).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {args.corpus}: {exc}") from None
    return run_suite(
        args.suite,
        seed=args.seed,
        count=args.count,
        max_n=args.max_n,
        max_size=args.max_size,
        wiener_max_n=args.wiener_max_n,
        k_cap=args.k_cap,
        corpus=corpus,
    )


_COMMANDS = {"index": cmd_index, "structure": cmd_structure, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 0:
        parser.error("--threads must be nonnegative")
    try:
        report = _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"swk: parse error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"swk: {exc}", file=sys.stderr)
        return 3
    print(report.to_json() if args.json else report.to_plain())
    if not report.ok():
        failing = [c["name"] for c in report.checks
                   if c.get("required", True) and not c["holds"]]
        print(f"swk: failed checks: {', '.join(failing)}", file=sys.stderr)
        return 1
    return 0


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
