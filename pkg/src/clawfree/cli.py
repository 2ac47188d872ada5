"""Command line entry point: ``clawfree <subcommand> ...``.

Graphs travel between subcommands as graph6, one token per line; lines
starting with ``#`` are annotations and are skipped by readers.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Iterator, TextIO

from .closure import closure, eligible_vertices
from .cycles import hamilton_cycle, longest_cycle
from .errors import GraphInputError
from .families import brousek, fig2, line_graph
from .formats import encode_dot, encode_edge_list, encode_graph6, read_graphs
from .graph import Graph, is_two_connected
from .patterns import find_claw, find_induced, make_pattern, phi_holds
from .regions import decompose, preimage
from .verify.statements import COUNTEREXAMPLE
from .verify.sweep import builtin_corpus, stream_corpus, sweep
from .verify.witness import brousek_witness

log = logging.getLogger("clawfree")


def _emit(g: Graph, fmt: str, out: TextIO, labels: dict[int, str] | None = None) -> None:
    if fmt == "graph6":
        out.write(encode_graph6(g) + "\n")
    elif fmt == "edgelist":
        out.write(encode_edge_list(g))
    elif fmt == "dot":
        out.write(encode_dot(g, labels=labels))
    elif fmt == "json":
        out.write(json.dumps({"n": g.n, "edges": g.edges(), "graph6": encode_graph6(g)}) + "\n")
    else:
        raise GraphInputError(f"unknown output format {fmt!r}")
    if labels and fmt in ("graph6", "edgelist"):
        for v, name in sorted(labels.items()):
            out.write(f"# {name} {v}\n")


def _inputs(args: argparse.Namespace) -> Iterator[Graph]:
    if args.input and args.input != "-":
        with open(args.input) as fh:
            yield from read_graphs(_skip_comments(fh), args.in_format)
    else:
        yield from read_graphs(_skip_comments(sys.stdin), args.in_format)


def _skip_comments(lines):
    for line in lines:
        if not line.lstrip().startswith("#"):
            yield line


def cmd_info(args, out):
    for g in _inputs(args):
        degs = g.degrees() or [0]
        claw = find_claw(g)
        closed = "n/a" if claw else ("yes" if not eligible_vertices(g) else "no")
        info = {"n": g.n, "m": g.size, "min_degree": min(degs), "max_degree": max(degs),
                "claw_free": claw is None, "two_connected": is_two_connected(g), "closed": closed}
        if args.format == "json":
            out.write(json.dumps(info) + "\n")
        else:
            out.write(" ".join(f"{k}={_yn(v)}" for k, v in info.items()) + "\n")


def _yn(v):
    if isinstance(v, bool):
        return "yes" if v else "no"
    return v


def cmd_closure(args, out):
    for g in _inputs(args):
        final, trace = closure(g, policy=args.policy, seed=args.seed)
        _emit(final, args.format, out)
        if args.trace:
            for i, step in enumerate(trace.steps):
                added = " ".join(f"{u}-{v}" for u, v in step.added)
                out.write(f"# step {i} vertex {step.vertex} added {added}\n")


def cmd_regions(args, out):
    for g in _inputs(args):
        d = decompose(g)
        if args.format == "dot" or args.dot:
            colors = {v: "lightblue" if lab == "interior" else "orange" for v, lab in enumerate(d.labels)}
            out.write(encode_dot(g, colors=colors))
            continue
        if args.format == "json":
            out.write(json.dumps({"regions": [list(r) for r in d.regions], "labels": list(d.labels)}) + "\n")
            continue
        for r, region in enumerate(d.regions):
            out.write(f"region {r}: {' '.join(map(str, region))}\n")
        for v, lab in enumerate(d.labels):
            out.write(f"vertex {v}: {lab} {' '.join(map(str, d.membership[v]))}\n")


def cmd_find(args, out):
    p = make_pattern(args.pattern)
    for g in _inputs(args):
        embs = find_induced(g, p, "all" if args.all else "first")
        if not embs:
            out.write("FREE\n")
        for e in embs:
            out.write(" ".join(map(str, e)) + "\n")


def cmd_phi(args, out):
    p = make_pattern(args.pattern)
    for g in _inputs(args):
        res = phi_holds(g, p, args.k)
        if res.holds:
            out.write("TRUE\n")
        else:
            out.write(f"FALSE vertex={res.vertex} degree={res.degree} n={g.n}\n")


def cmd_hamilton(args, out):
    for g in _inputs(args):
        cyc = hamilton_cycle(g, args.method)
        out.write("NONE\n" if cyc is None else " ".join(map(str, cyc)) + "\n")


def cmd_longest(args, out):
    for g in _inputs(args):
        out.write(f"{longest_cycle(g)}\n")


def cmd_gen(args, out):
    if args.family == "brousek":
        lg = brousek(args.spec)
    elif args.family == "fig2":
        lg = fig2(args.k)
    elif args.family == "pattern":
        p = make_pattern(args.spec)
        _emit(p.graph, args.format, out)
        return
    else:
        graphs = list(_inputs(args)) if args.spec is None else None
        if graphs is None:
            with open(args.spec) as fh:
                graphs = list(read_graphs(_skip_comments(fh), args.in_format))
        for h in graphs:
            lg = line_graph(h)
            _emit(lg.graph, args.format, out, lg.names() if args.labels else None)
        return
    _emit(lg.graph, args.format, out, lg.names() if args.labels else None)


def cmd_witness(args, out):
    for g in _inputs(args):
        found = brousek_witness(g, args.cap)
        if found is None:
            out.write("NONE\n")
            continue
        spec, emb = found
        out.write(f"{spec} {' '.join(map(str, emb))}\n")


def cmd_preimage(args, out):
    for g in _inputs(args):
        _emit(preimage(decompose(g)), args.format, out)


def cmd_verify(args, out):
    if args.stream:
        fh = sys.stdin if args.stream == "-" else open(args.stream)
        corpus = stream_corpus(_skip_comments(fh), args.stream)
    else:
        corpus = builtin_corpus(args.n_max, mode=args.mode)
    report = sweep(corpus, args.statement, workers=args.jobs, seed=args.seed)
    log.info("workers: %d", args.jobs)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.to_json())
    if args.format == "json":
        out.write(report.to_json())
    else:
        out.write(f"{report.summary()} (seed {args.seed})\n")
        for token in report.counterexamples:
            out.write(f"counterexample {token}\n")
    return 1 if report.counts[COUNTEREXAMPLE] else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default="graph6", choices=["graph6", "edgelist", "dot", "json"],
                        help="output format for emitted graphs and reports")
    common.add_argument("--input", default=None, help="read graphs from this file instead of stdin")
    common.add_argument("--in-format", default="graph6", choices=["graph6", "edgelist"])
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--json", default=None, help="also write the JSON report here")
    common.add_argument("--n-max", type=int, default=7)

    parser = argparse.ArgumentParser(prog="clawfree", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("info", parents=[common]).set_defaults(func=cmd_info)
    p = sub.add_parser("closure", parents=[common])
    p.add_argument("--trace", action="store_true")
    p.add_argument("--policy", choices=["lowest", "highest", "random"], default="lowest")
    p.set_defaults(func=cmd_closure)
    p = sub.add_parser("regions", parents=[common])
    p.add_argument("--dot", action="store_true", help="same as --format dot")
    p.set_defaults(func=cmd_regions)
    p = sub.add_parser("find", parents=[common])
    p.add_argument("pattern")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_find)
    p = sub.add_parser("phi", parents=[common])
    p.add_argument("pattern")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_phi)
    p = sub.add_parser("hamilton", parents=[common])
    p.add_argument("--method", choices=["backtrack", "dp"], default="backtrack")
    p.set_defaults(func=cmd_hamilton)
    sub.add_parser("longest-cycle", parents=[common]).set_defaults(func=cmd_longest)
    p = sub.add_parser("gen", parents=[common])
    p.add_argument("family", choices=["brousek", "fig2", "pattern", "linegraph"])
    p.add_argument("spec", nargs="?", help="connector spec (brousek), pattern name, or input file (linegraph)")
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--labels", action="store_true")
    p.set_defaults(func=cmd_gen)
    p = sub.add_parser("witness", parents=[common])
    p.add_argument("family", choices=["brousek"])
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_witness)
    sub.add_parser("preimage", parents=[common]).set_defaults(func=cmd_preimage)
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("statement")
    p.add_argument("--stream", default=None, help="graph6 file ('-' for stdin) instead of enumeration")
    p.add_argument("--mode", choices=["labeled", "iso"], default="labeled",
                   help="every labeled graph, or one graph per isomorphism class")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    out = out or sys.stdout
    try:
        if args.jobs < 1:
            raise GraphInputError("--jobs must be >= 1")
        if args.command == "gen" and args.family in ("brousek", "pattern") and not args.spec:
            raise GraphInputError(f"gen {args.family} needs a spec argument")
        return args.func(args, out) or 0
    except (GraphInputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
