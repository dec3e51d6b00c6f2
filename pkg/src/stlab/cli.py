"""Command-line surface for scripted experiments and regression runs.

One executable with subcommands; graphs stream as graph6 lines (or one JSON
object per line) on stdin/stdout so constructions pipe into checkers.  All
randomness is seeded through ``--seed`` and identical invocations produce
byte-identical output.  Exit status: 0 on success, 1 on a domain error, 2 on
a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .enumeration import connected_graphs, count_theta_free
from .extremal import inspect, landscape_table, local_search, verify_class
from .graphs import FamilySpec, Graph, construct, decode_graph6, encode_graph6
from .spectral import spectral_radius
from .subgraph import ThetaSpec, find_theta

__all__ = ["main", "dispatch"]


def _read_graphs(source: str):
    """Graphs from a file path or '-' (stdin): graph6 lines or JSON lines."""
    handle = sys.stdin if source == "-" else open(source, "r", encoding="utf-8")
    try:
        graphs = []
        for line in handle:
            line = line.strip()
            if not line:
                continue
            if line.startswith("{"):
                graphs.append(Graph.from_json_dict(json.loads(line)))
            else:
                graphs.append(decode_graph6(line))
        return graphs
    finally:
        if handle is not sys.stdin:
            handle.close()


def _emit(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _family_spec(args) -> FamilySpec:
    family = args.family.replace("-", "_")
    by_family = {
        "path": ("n",),
        "cycle": ("n",),
        "star": ("r",),
        "complete": ("n",),
        "complete_bipartite": ("a", "b"),
        "star_plus_edge": ("r",),
        "double_star": ("a", "b"),
        "k_join": ("k", "t"),
    }
    if family == "theta":
        if args.l is None:
            raise ValueError("family theta requires --l l1,l2,l3")
        spec = ThetaSpec.parse(args.l)
        return FamilySpec("theta", spec.as_tuple())
    names = by_family.get(family)
    if names is None:
        raise ValueError(f"unknown family {args.family!r}")
    params = []
    for name in names:
        value = getattr(args, name)
        if value is None:
            flags = " ".join(f"--{p}" for p in names)
            raise ValueError(f"family {args.family!r} requires {flags}")
        params.append(value)
    return FamilySpec(family, tuple(params))


def _print_graph(g: Graph, fmt: str) -> None:
    if fmt == "g6":
        print(encode_graph6(g))
    elif fmt == "json":
        print(_emit(g.to_json_dict()))
    elif fmt == "dot":
        print(g.to_dot())
    else:
        print(f"n={g.n} m={g.m} edges={g.edges()}")


def _cmd_construct(args) -> int:
    _print_graph(construct(_family_spec(args)), args.format)
    return 0


def _cmd_lambda(args) -> int:
    for g in _read_graphs(args.input):
        result = spectral_radius(g)
        if args.format == "text":
            print(f"lambda={result.lam:.12f} u_star={result.u_star}")
        else:
            print(_emit(result.to_json_dict()))
    return 0


def _cmd_theta_check(args) -> int:
    spec = ThetaSpec.parse(args.l)
    for g in _read_graphs(args.input):
        witness = find_theta(g, spec)
        verdict = {
            "spec": list(spec.as_tuple()),
            "contains": witness is not None,
            "witness": witness.to_json_dict() if witness is not None else None,
        }
        if args.format == "text":
            print("contains" if witness is not None else "free")
        else:
            print(_emit(verdict))
    return 0


def _cmd_enumerate(args) -> int:
    if args.count:
        payload = {"m": args.m, "total": 0, "free": None, "spec": None}
        if args.theta:
            spec = ThetaSpec.parse(args.theta)
            total, free = count_theta_free(args.m, spec)
            payload.update(total=total, free=free, spec=list(spec.as_tuple()))
        else:
            payload["total"] = sum(1 for _ in connected_graphs(args.m))
        print(_emit(payload))
        return 0
    for g in connected_graphs(args.m):
        print(encode_graph6(g))
    return 0


def _cmd_verify(args) -> int:
    spec = ThetaSpec.parse(args.theta)
    if args.table:
        print(landscape_table(args.m, spec, jobs=args.jobs))
        return 0
    report = verify_class(args.m, spec, jobs=args.jobs)
    if args.format == "text":
        d = report.to_json_dict()
        for key in ("m", "total", "free", "max_lambda", "bound", "bound_holds",
                    "extremal_matches_construction"):
            print(f"{key}: {d[key]}")
        for entry in d["argmax"]:
            print(f"argmax: {entry['g6']} lambda={entry['lambda']}")
    else:
        print(_emit(report.to_json_dict()))
    return 0


def _cmd_inspect(args) -> int:
    for g in _read_graphs(args.input):
        print(_emit(inspect(g).to_json_dict()))
    return 0


def _cmd_search(args) -> int:
    spec = ThetaSpec.parse(args.theta)
    report = local_search(args.m, spec, budget=args.budget, seed=args.seed,
                          start=args.start)
    print(_emit(report.to_json_dict()))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stlab",
        description="spectral extremal graph workbench",
    )
    default_jobs = int(os.environ.get("STLAB_JOBS", "1"))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a named graph family member")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--l", help="theta path lengths, e.g. 1,3,3")
    p.add_argument("--format", choices=("json", "text", "g6", "dot"), default="json")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("lambda", help="spectral radius of each input graph")
    p.add_argument("--in", dest="input", default="-",
                   help="graph6 or JSON lines; '-' for stdin")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_lambda)

    p = sub.add_parser("theta-check", help="test each input graph for a theta pattern")
    p.add_argument("--l", required=True, help="path lengths, e.g. 1,3,3")
    p.add_argument("--in", dest="input", default="-")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_theta_check)

    p = sub.add_parser("enumerate", help="connected graphs with m edges, one per class")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--theta", help="path lengths for --count filtering")
    p.add_argument("--count", action="store_true",
                   help="print counts as JSON instead of streaming graph6")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="exhaustive sweep at one edge count")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--theta", default="1,3,3")
    p.add_argument("--table", action="store_true",
                   help="emit the TSV landscape for 1..m instead of one report")
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("inspect", help="extremal-vertex decomposition report")
    p.add_argument("--in", dest="input", default="-")
    p.set_defaults(func=_cmd_inspect)

    p = sub.add_parser("search", help="seeded hill climb over pattern-free graphs")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--theta", default="1,3,3")
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--start", choices=("random", "construction"), default="random")
    p.set_defaults(func=_cmd_search)

    return parser


def dispatch(argv) -> int:
    """Parse ``argv`` and run the matching subcommand."""
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    return dispatch(argv)


if __name__ == "__main__":
    sys.exit(main())
