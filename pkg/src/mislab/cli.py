"""Command-line front end: construct, count, search, verify.

Reports are reproducible: every JSON report embeds the package version and
the full run configuration (seed and thread count included), keys are
sorted, and no timestamps appear, so identical configurations produce
byte-identical files.

Exit codes: 0 success, 2 bad input or usage, 3 structural violation
(requested clique-freeness fails), 4 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .constructions import (
    BlowupSpec,
    blowup,
    c4_leaves_graph,
    comatching,
    disjoint_gadget_union,
    dominating_clique_graph,
    gadget,
    rs_packing,
    star_hypergraph,
    tight_cycle,
    tight_cycle_blowup,
    trivial_packing,
    window_hypergraph,
)
from .engine import (
    count_all_mis,
    count_k_mis,
    count_transversal_mis,
    hypergraph_count_k_mis,
)
from .formats import (
    graph6_decode,
    graph6_encode,
    hypergraph_from_json,
    hypergraph_to_json,
)
from .graphs import Graph, Hypergraph, PartitionedGraph, has_clique
from .search import THEOREM_IDS, SearchSpec, exhaustive_m, verify_theorem

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_STRUCTURAL = 3
EXIT_MISMATCH = 4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _default_threads() -> int:
    env = os.environ.get("MIS_LAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _report_json(args: argparse.Namespace, command: str, result: dict) -> str:
    config = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("func", "out") and v is not None
    }
    doc = {
        "version": __version__,
        "command": command,
        "config": config,
        "seed": getattr(args, "seed", 0),
        "threads": getattr(args, "threads", 1),
        "result": result,
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _parse_range(text: str) -> range:
    """Parse '4..7' or a single integer into an inclusive range."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


# construct ----------------------------------------------------------------

CONSTRUCT_NAMES = (
    "comatching",
    "gadget",
    "tight-cycle",
    "blowup",
    "theorem-a",
    "theorem-b",
    "hyper",
    "star-hyper",
    "dominating",
    "c4-leaves",
)


def _build_construction(args: argparse.Namespace):
    """Returns (object, kind) with kind 'graph'|'partitioned'|'hypergraph',
    plus the clique size whose absence the construction promises (or None)."""
    name = args.name
    need = lambda *keys: _require(args, name, *keys)
    if name == "comatching":
        need("n")
        return comatching(args.n), "partitioned", 3
    if name == "gadget":
        need("m")
        packing = args.packing or "trivial"
        if packing == "rs":
            return gadget(rs_packing(args.m)), "partitioned", None
        need("r")
        return gadget(trivial_packing(args.r, args.m)), "partitioned", None
    if name == "tight-cycle":
        need("r", "k")
        return tight_cycle(args.r, args.k), "hypergraph", None
    if name == "blowup":
        need("spec")
        with open(args.spec) as fh:
            spec = BlowupSpec.from_json(json.load(fh))
        return blowup(spec), "partitioned", None
    if name == "theorem-a":
        need("k", "t", "m")
        return disjoint_gadget_union(args.k, args.t, args.m), "graph", args.t
    if name == "theorem-b":
        need("k", "t", "m")
        return tight_cycle_blowup(args.k, args.t, args.m), "partitioned", args.t
    if name == "hyper":
        need("r", "k", "n")
        return window_hypergraph(args.r, args.k, args.n), "hypergraph", None
    if name == "star-hyper":
        need("n")
        return star_hypergraph(args.n), "hypergraph", None
    if name == "dominating":
        need("t", "n")
        return dominating_clique_graph(args.t, args.n), "graph", args.t
    if name == "c4-leaves":
        return c4_leaves_graph(), "graph", 3
    raise CliError(f"unknown construction {name!r}")


def _require(args: argparse.Namespace, name: str, *keys: str) -> None:
    missing = [k for k in keys if getattr(args, k, None) is None]
    if missing:
        raise CliError(f"construct {name} needs --{' --'.join(missing)}")


def cmd_construct(args: argparse.Namespace) -> int:
    obj, kind, forbid = _build_construction(args)
    if kind == "hypergraph":
        h: Hypergraph = obj
        summary = f"hypergraph n={h.n} edges={len(h.edges)}"
        payload = json.dumps(hypergraph_to_json(h), sort_keys=True) + "\n"
        clique_ok = None
    else:
        g: Graph = obj.graph if kind == "partitioned" else obj
        summary = f"graph n={g.n} edges={g.edge_count()}"
        payload = graph6_encode(g).decode("ascii") + "\n"
        clique_ok = None
        if forbid is not None:
            clique_ok = not has_clique(g, forbid)
            summary += f" K{forbid}-free={clique_ok}"
    if args.format == "json":
        result = {"summary": summary, "data": payload.strip()}
        if clique_ok is not None:
            result["clique_free"] = clique_ok
        _emit(_report_json(args, "construct", result), args.out)
    else:
        _emit(payload, args.out)
        print(summary, file=sys.stderr)
    if clique_ok is False:
        raise CliError(f"construction contains a K_{forbid}", EXIT_STRUCTURAL)
    return EXIT_OK


# count ---------------------------------------------------------------------


def _load_countable(path: str) -> Graph | Hypergraph:
    """Read a graph6 line or a hypergraph JSON document."""
    with open(path, "rb") as fh:
        blob = fh.read().strip()
    if not blob:
        raise CliError(f"empty input {path}")
    if blob.lstrip()[:1] == b"{":
        try:
            return hypergraph_from_json(json.loads(blob))
        except (ValueError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot parse {path}: {exc}")
    try:
        return graph6_decode(blob.splitlines()[0])
    except ValueError as exc:
        raise CliError(f"cannot parse {path}: {exc}")


def cmd_count(args: argparse.Namespace) -> int:
    obj = _load_countable(args.graph)
    if isinstance(obj, Hypergraph):
        if args.transversal or args.forbid_clique is not None:
            raise CliError("hypergraph inputs support plain --k counting only")
        if args.k is None:
            raise CliError("hypergraph counting needs --k")
        value = hypergraph_count_k_mis(obj, args.k)
        what = f"hypergraph {args.k}-MIS count"
    elif args.forbid_clique is not None and has_clique(obj, args.forbid_clique):
        print(f"graph contains a K_{args.forbid_clique}", file=sys.stderr)
        return EXIT_STRUCTURAL
    elif args.transversal:
        if not args.parts:
            raise CliError("--transversal needs --parts FILE")
        with open(args.parts) as fh:
            parts = json.load(fh)
        pg = PartitionedGraph.from_parts(obj, parts)
        value = count_transversal_mis(pg)
        what = f"transversal {len(pg.parts)}-MIS count"
    elif args.k is not None:
        value = count_k_mis(obj, args.k)
        what = f"{args.k}-MIS count"
    else:
        value = count_all_mis(obj)
        what = "MIS count"
    if args.format == "json":
        _emit(_report_json(args, "count", {"what": what, "value": value}), args.out)
    else:
        _emit(f"{value}\n", args.out)
    return EXIT_OK


# search / verify -----------------------------------------------------------


def cmd_search(args: argparse.Namespace) -> int:
    spec = SearchSpec(
        n=args.n,
        k=args.k,
        t=args.t,
        r=args.r,
        collect_witnesses=args.witnesses,
        witness_cap=args.witness_cap,
    )
    report = exhaustive_m(spec, workers=args.threads)
    if args.format == "csv":
        lines = ["n,k,t,r,value,graphs_scanned,truncated"]
        lines.append(
            f"{spec.n},{spec.k if spec.k is not None else ''},"
            f"{spec.t if spec.t is not None else ''},{spec.r},"
            f"{report.value},{report.graphs_scanned},{int(report.truncated)}"
        )
        lines.extend(report.witnesses)
        _emit("\n".join(lines) + "\n", args.out)
    elif args.format == "graph6":
        _emit("\n".join(report.witnesses) + "\n", args.out)
    else:
        _emit(_report_json(args, "search", report.to_json()), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    rows = verify_theorem(
        args.theorem,
        n_range=_parse_range(args.n),
        k_range=_parse_range(args.k) if args.k else None,
        t_range=_parse_range(args.t) if args.t else None,
        workers=args.threads,
    )
    ok = all(r.match for r in rows)
    if args.format == "json":
        result = {
            "theorem": args.theorem,
            "rows": [
                {"params": dict(r.params), "computed": r.computed,
                 "formula": r.formula, "match": r.match}
                for r in rows
            ],
            "all_match": ok,
        }
        _emit(_report_json(args, "verify", result), args.out)
    else:
        keys = [k for k, _ in rows[0].params] if rows else []
        lines = [",".join(keys + ["computed", "formula", "match"])]
        for r in rows:
            vals = [str(v) for _, v in r.params]
            lines.append(",".join(vals + [str(r.computed), str(r.formula), str(int(r.match))]))
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if ok else EXIT_MISMATCH


# entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mislab",
        description="Extremal constructions and exhaustive counts for maximal independent sets.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, fmt_choices: tuple[str, ...], fmt_default: str) -> None:
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--format", choices=fmt_choices, default=fmt_default)
        p.add_argument("--seed", type=int, default=0, help="RNG seed recorded in reports")
        p.add_argument("--threads", type=int, default=_default_threads(),
                       help="worker count (default: MIS_LAB_THREADS or cpu count)")

    pc = sub.add_parser("construct", help="emit one of the library constructions")
    pc.add_argument("name", choices=CONSTRUCT_NAMES)
    pc.add_argument("--n", type=int)
    pc.add_argument("--k", type=int)
    pc.add_argument("--t", type=int)
    pc.add_argument("--m", type=int)
    pc.add_argument("--r", type=int)
    pc.add_argument("--packing", choices=("trivial", "rs"))
    pc.add_argument("--spec", help="blowup spec JSON file")
    common(pc, ("graph6", "json", "text"), "text")
    pc.set_defaults(func=cmd_construct)

    pn = sub.add_parser(
        "count", help="count maximal independent sets of a graph6 or hypergraph JSON file"
    )
    pn.add_argument("--graph", required=True, help="graph6 line or hypergraph JSON file")
    pn.add_argument("--k", type=int, help="restrict to MIS's of this size")
    pn.add_argument("--transversal", action="store_true")
    pn.add_argument("--parts", help="JSON list of parts for --transversal")
    pn.add_argument("--forbid-clique", type=int, dest="forbid_clique",
                    help="fail with exit 3 if the graph contains a clique this large")
    common(pn, ("text", "json"), "text")
    pn.set_defaults(func=cmd_count)

    ps = sub.add_parser("search", help="exhaustive extremal value over all small graphs")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--k", type=int)
    ps.add_argument("--t", type=int, help="forbid cliques of this size")
    ps.add_argument("--r", type=int, default=2, choices=(2, 3))
    ps.add_argument("--witnesses", action="store_true")
    ps.add_argument("--witness-cap", type=int, default=64, dest="witness_cap")
    common(ps, ("json", "csv", "graph6"), "json")
    ps.set_defaults(func=cmd_search)

    pv = sub.add_parser("verify", help="check exhaustive values against a closed form")
    pv.add_argument("--theorem", required=True, choices=THEOREM_IDS)
    pv.add_argument("--n", required=True, help="range like 4..7")
    pv.add_argument("--k", help="range like 2..3")
    pv.add_argument("--t", help="range like 3..5")
    common(pv, ("csv", "json"), "csv")
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
