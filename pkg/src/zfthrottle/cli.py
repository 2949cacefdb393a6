"""Command-line entry point: ``python -m zfthrottle <verb> ...``.

Exit status is 0 on success, 1 when a verification suite records a failure,
and 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .digraph import Digraph, UndirectedGraph, as_mask, load_digraph, members, orientation
from .errors import GraphError, NotForcingError
from .families import FamilySpec, generate
from .forcing import NOT_FORCING, propagate_greedy, pt_k_with_set, zero_forcing_number
from .throttling import OTIReport, default_threads, merge_oti, oti, throttling_number
from .verifier import (
    SUITES, Scope, SuiteReport, census_distribution, check_conjecture_stats, merge_census,
    merge_path_stats, run_suite, verify_alternating_conjecture,
)


class UsageError(Exception):
    pass


def _shards(text):
    if text is None:
        return None
    try:
        i, j = (int(x) for x in text.split("/"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected i/j, got {text!r}") from None
    if not 0 <= i < j:
        raise argparse.ArgumentTypeError(f"need 0 <= i < j, got {text!r}")
    return i, j


def _vertex_list(text):
    return [int(x) for x in text.split(",") if x.strip()]


def _load(args) -> Digraph | UndirectedGraph:
    if args.family and args.file:
        raise UsageError("give either --family or --file, not both")
    if args.family:
        return generate(FamilySpec.parse(args.family))
    if args.file:
        text = sys.stdin.read() if args.file == "-" else open(args.file).read()
        return load_digraph(text)
    raise UsageError("an input graph is required (--family SPEC or --file PATH)")


def _as_digraph(g, index) -> Digraph:
    if isinstance(g, UndirectedGraph):
        return orientation(g, index) if index is not None else Digraph(g.n, g.adj)
    if index is not None:
        raise UsageError("--orientation applies only to undirected families")
    return g


def _as_undirected(g) -> UndirectedGraph:
    if isinstance(g, UndirectedGraph):
        return g
    return g.underlying()


def cmd_compute(args):
    d = _as_digraph(_load(args), args.orientation)
    if args.quantity == "th":
        return throttling_number(d).to_dict() | {"n": d.n}
    if args.quantity == "z":
        return {"n": d.n, "z": zero_forcing_number(d)}
    if args.quantity == "pt":
        if args.B is None:
            raise UsageError("compute pt needs --B")
        tl = propagate_greedy(d, as_mask(args.B))
        return tl.to_dict() | {"n": d.n, "B": sorted(args.B), "forcing": tl.pt is not NOT_FORCING}
    if args.k is None:
        raise UsageError("compute ptk needs --k")
    pt, mask = pt_k_with_set(d, args.k)
    return {"n": d.n, "k": args.k, "pt": pt, "B": members(mask)}


def cmd_generate(args):
    g = generate(FamilySpec.parse(args.spec))
    d = _as_digraph(g, args.orientation)
    if args.format == "json":
        return d.to_dict()
    sys.stdout.write(d.to_edge_list())
    return None


def cmd_oti(args):
    g = _as_undirected(_load(args))
    name = args.family or args.file
    report = oti(g, name, args.shards, args.pair_transposes, args.threads)
    return report.to_dict()


def _scope(args) -> Scope:
    given = [s for s in (args.scope, args.census, args.range, args.random) if s is not None]
    if len(given) > 1:
        raise UsageError("give at most one of --scope, --census, --range, --random")
    if args.scope:
        scope = Scope.parse(args.scope)
    elif args.census is not None:
        scope = Scope("census", n=args.census)
    elif args.range:
        scope = Scope.parse(f"family:{args.range}")
    elif args.random:
        seed = args.seed if args.seed is not None else 0
        scope = Scope.parse(f"random:{args.random},{seed}")
    else:
        return None
    return scope


def cmd_verify(args):
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; known: {', '.join(sorted(SUITES))}")
    return run_suite(args.suite, _scope(args))


def cmd_conjecture(args):
    return verify_alternating_conjecture(args.nmax, args.shards, args.threads)


def cmd_census(args):
    if args.stat != "th":
        raise UsageError("only --stat th is supported")
    return census_distribution(args.n, args.shards)


def cmd_merge(args):
    docs = []
    for path in args.files:
        with open(path) as fh:
            docs.append(json.load(fh))
    if not docs:
        raise UsageError("nothing to merge")
    if all("values" in d for d in docs):
        return merge_oti(OTIReport.from_dict(d) for d in docs).to_dict()
    if all("distribution" in d for d in docs):
        return merge_census(docs)
    if all(d.get("suite") == "conjecture" for d in docs):
        by_n = {}
        for d in docs:
            for s in d["notes"]:
                by_n.setdefault(s["n"], []).append({k: v for k, v in s.items() if k != "expected"})
        rep = SuiteReport("conjecture", docs[0]["scope"], None)
        check_conjecture_stats([merge_path_stats(by_n[n]) for n in sorted(by_n)], rep)
        rep.ms = sum(d.get("ms", 0) for d in docs)
        return rep
    if all("suite" in d for d in docs):
        rep = SuiteReport(docs[0]["suite"], docs[0]["scope"], docs[0]["seed"])
        for d in docs:
            rep.instances += d["instances"]
            rep.failures.extend(d["failures"])
            rep.notes.extend(d.get("notes", []))
            rep.ms += d.get("ms", 0)
        return rep
    raise UsageError("inputs are not shard outputs of one kind")


def _flat(value):
    if isinstance(value, (list, tuple)):
        return " ".join(_flat(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True)
    return "" if value is None else str(value)


def render(result, fmt: str) -> str:
    if isinstance(result, SuiteReport):
        result = result.to_dict()
    if fmt == "json":
        return json.dumps(result, sort_keys=True)
    if fmt == "text":
        return "\n".join(f"{k}: {_flat(v)}" for k, v in result.items())
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(list(result))
    w.writerow([_flat(v) for v in result.values()])
    return buf.getvalue().rstrip("\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zfthrottle", description="Zero forcing, propagation time and throttling on digraphs.")
    p.add_argument("--format", choices=["json", "csv", "text"], default=None)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["json", "csv", "text"], default=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="verb", required=True)

    def inputs(sp):
        sp.add_argument("--family", help="family spec, e.g. host:3,2 or altpath:14")
        sp.add_argument("--file", help="edge-list or JSON digraph file ('-' for stdin)")

    c = sub.add_parser("compute", parents=[fmt], help="th, pt, pt_k or Z of a digraph")
    c.add_argument("quantity", choices=["th", "pt", "ptk", "z"])
    inputs(c)
    c.add_argument("--orientation", type=int, help="orientation index for undirected families")
    c.add_argument("--k", type=int)
    c.add_argument("--B", type=_vertex_list, help="comma-separated initial blue set")

    g = sub.add_parser("generate", parents=[fmt], help="print a family member as an edge list")
    g.add_argument("spec")
    g.add_argument("--orientation", type=int)

    o = sub.add_parser("oti", parents=[fmt], help="orientation throttling interval of an undirected graph")
    inputs(o)
    o.add_argument("--shards", type=_shards)
    o.add_argument("--pair-transposes", action="store_true")
    o.add_argument("--threads", type=int, default=None)

    v = sub.add_parser("verify", parents=[fmt], help="run a verification suite")
    v.add_argument("suite")
    v.add_argument("--scope", help="census:N | family:LO..HI | random:NMAX,COUNT,SEED")
    v.add_argument("--census", type=int)
    v.add_argument("--range", help="family parameter range LO..HI")
    v.add_argument("--random", help="NMAX,COUNT (with --seed)")
    v.add_argument("--seed", type=int)

    k = sub.add_parser("conjecture", parents=[fmt], help="max th over all orientations of P_n, n <= NMAX")
    k.add_argument("--nmax", type=int, required=True)
    k.add_argument("--shards", type=_shards)
    k.add_argument("--threads", type=int, default=None)

    n = sub.add_parser("census", parents=[fmt], help="distribution of a statistic over all digraphs on N vertices")
    n.add_argument("--n", type=int, required=True)
    n.add_argument("--stat", default="th")
    n.add_argument("--shards", type=_shards)

    m = sub.add_parser("merge", parents=[fmt], help="combine shard outputs")
    m.add_argument("files", nargs="+")
    return p


COMMANDS = {
    "compute": cmd_compute,
    "generate": cmd_generate,
    "oti": cmd_oti,
    "verify": cmd_verify,
    "conjecture": cmd_conjecture,
    "census": cmd_census,
    "merge": cmd_merge,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.format is None and args.verb != "generate":
        args.format = "json"
    if getattr(args, "threads", 0) is None:
        args.threads = default_threads()
    try:
        result = COMMANDS[args.verb](args)
    except (UsageError, GraphError, NotForcingError, OSError, json.JSONDecodeError, KeyError) as e:
        print(f"zfthrottle: error: {e}", file=sys.stderr)
        return 2
    if result is None:
        return 0
    print(render(result, args.format))
    if isinstance(result, SuiteReport):
        return 0 if result.passed else 1
    return 0


__all__ = ["main", "build_parser", "render"]
