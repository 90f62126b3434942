"""Command-line driver.

Exit codes: 0 accepted / success, 1 rejected (a valid negative answer with
a witness on stdout), 2 usage or input error, 3 internal inconsistency.
Only machine-readable payload goes to stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import formats
from .bigraph import BiGraph, OddCycleWitness, infer_bipartition
from .errors import FormatError, GraphError, InternalInconsistency, NameMismatch, QbmgError
from .genlab import (
    EnumConfig,
    TreeGenConfig,
    cross_check,
    enumerate_bipartite,
    loglog_exponent,
    random_bipartite,
    random_tree,
    scaling_run,
)
from .oracles import PATTERN_CAP, default_hereditary_cap, find_forbidden, hereditary_heart_check, refine_witness
from .recognition import Witness, WitnessKind, heart_tree
from .semantics import check_explains, check_least_resolved, directed_qbmg, explain, validate_lrt_structure

log = logging.getLogger("qbmg")

EXIT_OK, EXIT_REJECT, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _load_graph(args) -> tuple[formats.GraphDocument, BiGraph | None, Witness | None]:
    """Graph file to (document, colored graph or None, odd-cycle witness or None)."""
    text = _read(args.graph)
    if getattr(args, "graph6", False):
        docs = formats.read_graph6(text)
        if not docs:
            raise FormatError("no graph6 record found", line=1)
        doc = docs[0]
    else:
        doc = formats.read_graph_document(text)
    if doc.colors is None:
        g = infer_bipartition(len(doc.names), doc.edges, doc.names)
        if isinstance(g, OddCycleWitness):
            return doc, None, Witness(WitnessKind.ODD_CYCLE, g.cycle)
        return doc, g, None
    return doc, formats.graph_from_document(doc), None


def cmd_recognize(args) -> int:
    doc, g, odd = _load_graph(args)
    if odd is not None:
        print(odd.describe(doc.names))
        return EXIT_REJECT
    verdict = heart_tree(g)
    if verdict.accepted:
        print(formats.serialize_tree(verdict.tree))
        if args.dot:
            _write(args.dot, formats.export_dot(verdict.tree))
        return EXIT_OK
    witness = verdict.witness
    if args.witness == "forbidden":
        witness = refine_witness(g, witness)
    print(witness.describe(g.names))
    if args.dot:
        _write(args.dot, formats.export_dot(g, highlight=witness.vertices))
    return EXIT_REJECT


def cmd_explain(args) -> int:
    t = formats.parse_tree(_read(args.tree))
    if args.directed:
        d = directed_qbmg(t)
        for x, y in d.arcs():
            print(f"a {d.names[x]} {d.names[y]}")
        if args.dot:
            _write(args.dot, formats.export_dot(d))
    else:
        g = explain(t).graph
        sys.stdout.write(formats.serialize_graph(g))
        if args.dot:
            _write(args.dot, formats.export_dot(g))
    return EXIT_OK


def cmd_check_tree(args) -> int:
    t = formats.parse_tree(_read(args.tree))
    doc = formats.read_graph_document(_read(args.graph))
    if doc.colors is None:
        # no declared colors: take them from the tree leaves
        by_name = {t.names[v]: t.colors[v] for v in t.leaves}
        if set(by_name) != set(doc.names):
            raise NameMismatch("leaf names and vertex names differ")
        doc = formats.GraphDocument(doc.names, tuple(by_name[s] for s in doc.names), doc.edges)
    try:
        g = formats.graph_from_document(doc)
    except GraphError as exc:
        log.info("graph is not properly colored by the tree: %s", exc)
        print("explains=false\nleast_resolved=n/a\nlrt_structure_clean=n/a")
        return EXIT_REJECT
    if not check_explains(t, g):
        print("explains=false\nleast_resolved=n/a\nlrt_structure_clean=n/a")
        return EXIT_REJECT
    lr = check_least_resolved(t, g)
    violations = validate_lrt_structure(t, g)
    for v in violations:
        log.info("%s", v)
    print(f"explains=true\nleast_resolved={_bool(lr)}\nlrt_structure_clean={_bool(not violations)}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    doc, g, odd = _load_graph(args)
    if odd is not None:
        print("reject")
        print(odd.describe(doc.names))
        return EXIT_REJECT
    if args.method == "forbidden":
        emb = find_forbidden(g, cap=args.cap or PATTERN_CAP)
        if emb is None:
            print("accept")
            return EXIT_OK
        print("reject")
        print(emb.as_witness().describe(g.names))
        return EXIT_REJECT
    ok, subset = hereditary_heart_check(g, cap=args.cap or default_hereditary_cap())
    if ok:
        print("accept")
        return EXIT_OK
    print("reject")
    print(Witness(WitnessKind.HEARTLESS, subset).describe(g.names))
    return EXIT_REJECT


def cmd_gen(args) -> int:
    if args.kind == "tree":
        cfg = TreeGenConfig(
            args.leaves, args.seed, args.internal_bias, args.trunc_self_prob, args.color_prob
        )
        print(formats.serialize_tree(random_tree(cfg)))
    else:
        if not 0.0 <= args.edge_prob <= 1.0:
            raise ValueError("--edge-prob must lie in [0, 1]")
        sys.stdout.write(formats.serialize_graph(random_bipartite(args.n, args.edge_prob, args.seed)))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    cfg = EnumConfig(args.max_n, args.connected_only, args.dedupe, args.min_n)
    corpus = enumerate_bipartite(cfg)
    if not args.cross_check:
        counts: dict[int, int] = {}
        for g in corpus:
            counts[g.n] = counts.get(g.n, 0) + 1
        print("# n\tcount")
        for n, c in sorted(counts.items()):
            print(f"{n}\t{c}")
        print(f"total\t{sum(counts.values())}")
        return EXIT_OK
    report = cross_check(corpus, cap=args.cap, workers=args.workers)
    sys.stdout.write(report.to_text())
    if args.figure:
        from .plotting import plot_cross_check

        plot_cross_check(report, args.figure)
    return EXIT_OK if report.disagreements == 0 else EXIT_INTERNAL


def cmd_bench(args) -> int:
    rows = scaling_run(args.sizes, args.seed, repeats=args.repeats, internal_bias=args.internal_bias)
    print("# n\tedges\tseconds")
    for n, m, s in rows:
        print(f"{n}\t{m}\t{s:.6f}")
    exponent = loglog_exponent([r[0] for r in rows], [r[2] for r in rows])
    print(f"exponent\t{exponent:.3f}")
    if args.figure:
        from .plotting import plot_scaling

        plot_scaling([r[0] for r in rows], [r[2] for r in rows], args.figure, exponent)
    return EXIT_OK


def _sizes(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qbmg", description="Recognize undirected 2-quasi best match graphs.")
    p.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("recognize", help="decide membership; print an explaining tree or a witness")
    r.add_argument("graph", help="graph file, '-' for stdin")
    r.add_argument("--witness", choices=("heartless", "forbidden"), default="heartless")
    r.add_argument("--dot", metavar="PATH", help="write the tree (or the graph with the witness marked) as DOT")
    r.add_argument("--graph6", action="store_true", help="input is graph6; the first record is used")
    r.set_defaults(func=cmd_recognize)

    e = sub.add_parser("explain", help="print the graph explained by a tree")
    e.add_argument("tree")
    e.add_argument("--directed", action="store_true", help="print the arcs of the directed 2-qBMG")
    e.add_argument("--dot", metavar="PATH")
    e.set_defaults(func=cmd_explain)

    c = sub.add_parser("check-tree", help="does a tree explain a graph, and is it least-resolved?")
    c.add_argument("tree")
    c.add_argument("graph")
    c.set_defaults(func=cmd_check_tree)

    o = sub.add_parser("oracle", help="brute-force membership test")
    o.add_argument("graph")
    o.add_argument("--method", choices=("forbidden", "hereditary"), default="forbidden")
    o.add_argument("--cap", type=int, default=None, help="vertex cap (hereditary default: $QBMG_ORACLE_CAP or 16)")
    o.add_argument("--graph6", action="store_true")
    o.set_defaults(func=cmd_oracle)

    g = sub.add_parser("gen", help="seeded random instance")
    g.add_argument("kind", choices=("tree", "graph"))
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--leaves", type=int, default=8)
    g.add_argument("--internal-bias", type=float, default=0.5)
    g.add_argument("--trunc-self-prob", type=float, default=0.3)
    g.add_argument("--color-prob", type=float, default=0.5)
    g.add_argument("--n", type=int, default=8)
    g.add_argument("--edge-prob", type=float, default=0.4)
    g.set_defaults(func=cmd_gen)

    n = sub.add_parser("enumerate", help="exhaustive small bipartite graphs, optionally cross-checked")
    n.add_argument("--max-n", type=int, required=True)
    n.add_argument("--min-n", type=int, default=1)
    n.add_argument("--connected-only", action="store_true")
    n.add_argument("--dedupe", choices=("labeled", "iso"), default="labeled")
    n.add_argument("--cross-check", action="store_true")
    n.add_argument("--cap", type=int, default=None)
    n.add_argument("--workers", type=int, default=1)
    n.add_argument("--figure", metavar="PATH", help="with --cross-check, write a per-size bar chart")
    n.set_defaults(func=cmd_enumerate)

    b = sub.add_parser("bench", help="time recognition on tree-generated graphs")
    b.add_argument("--sizes", type=_sizes, default=[200, 400, 800, 1600])
    b.add_argument("--seed", type=int, required=True)
    b.add_argument("--repeats", type=int, default=3)
    b.add_argument("--internal-bias", type=float, default=0.5)
    b.add_argument("--figure", metavar="PATH", help="write a log-log plot")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (QbmgError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
