"""Command-line interface.

Subcommands: solve, verify, construct, generate, audit, conjecture.
Graphs are read from files or stdin ("-"): graph6 one per line, or a plain
edge list when the payload starts with a digit.  Declared payloads go to
stdout, diagnostics to stderr.  URMATCH_SEED supplies the default seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .audit import audit_corpus, conjecture1_scan, conjecture2_scan
from .constructive import construct_theorem1, construct_theorem2, construct_theorem3
from .generators import complete_bipartite, gk_gadget, random_graph
from .graph import Graph, GraphError, degree_profile, delete_vertices
from .graph6 import parse_edge_list, parse_graph6, write_graph6
from .matchings import (
    is_acyclic_matching,
    is_uniquely_restricted_fast,
    is_uniquely_restricted_oracle,
    matching_from_json,
)
from .solvers import DEFAULT_BUDGET, max_matching, nu_ac_exact, nu_ur_exact


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(path: str) -> Graph:
    text = _read_text(path)
    stripped = text.lstrip()
    if not stripped:
        raise GraphError(f"empty graph input {path!r}")
    if stripped[0].isdigit():
        return parse_edge_list(text)
    return parse_graph6(stripped.splitlines()[0])


def _default_seed() -> int:
    return int(os.environ.get("URMATCH_SEED", "0"))


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="urmatch",
        description="uniquely restricted and acyclic matchings: solvers, "
        "certified constructions, and bound audits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="compute nu, nu_ur, or nu_ac exactly")
    p_solve.add_argument("--what", choices=["nu", "nu_ur", "nu_ac"], required=True)
    p_solve.add_argument("--in", dest="infile", required=True)
    p_solve.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p_verify = sub.add_parser("verify", help="check a matching predicate")
    p_verify.add_argument("--matching", required=True)
    p_verify.add_argument("--in", dest="infile", required=True)
    p_verify.add_argument("--check", choices=["ur", "acyclic"], required=True)
    p_verify.add_argument("--oracle", action="store_true")

    p_con = sub.add_parser("construct", help="run a certified bound constructor")
    p_con.add_argument("--theorem", choices=["1", "2", "3"], required=True)
    p_con.add_argument("--in", dest="infile", required=True)
    p_con.add_argument("--delta", type=int)
    p_con.add_argument(
        "--strip-isolated",
        action="store_true",
        help="drop isolated vertices first (theorem 1 requires none)",
    )

    p_gen = sub.add_parser("generate", help="emit graph6 for a family")
    p_gen.add_argument("--family", choices=["kdr", "gk", "random"], required=True)
    p_gen.add_argument("--a", type=int)
    p_gen.add_argument("--b", type=int)
    p_gen.add_argument("--k", type=int)
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--delta", type=int)
    p_gen.add_argument("--girth", type=int)
    p_gen.add_argument("--seed", type=int, default=None)

    p_audit = sub.add_parser("audit", help="audit a graph6 corpus against all bounds")
    p_audit.add_argument("--corpus", required=True, help="file of graph6 lines, or -")
    p_audit.add_argument("--threshold", type=int, default=14)
    p_audit.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_audit.add_argument("--strict", action="store_true")
    p_audit.add_argument("--jobs", type=int, default=1)
    p_audit.add_argument("--format", choices=["json", "csv"], default="json")

    p_conj = sub.add_parser("conjecture", help="experimental conjecture scans")
    p_conj.add_argument("--which", choices=["1", "2"], required=True)
    p_conj.add_argument("--delta", type=int, default=3)
    p_conj.add_argument("--n", type=int, default=12)
    p_conj.add_argument("--samples", type=int, default=50)
    p_conj.add_argument("--girth-list", type=int, nargs="+", default=[3, 5, 7])
    p_conj.add_argument("--seed", type=int, default=None)
    return parser


def _cmd_solve(args: argparse.Namespace) -> int:
    g = _load_graph(args.infile)
    solver = {"nu": max_matching, "nu_ur": nu_ur_exact, "nu_ac": nu_ac_exact}[args.what]
    result = solver(g) if args.what == "nu" else solver(g, args.budget)
    _emit(result.to_json_dict())
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.infile)
    data = json.loads(_read_text(args.matching))
    m = matching_from_json(g, data)
    payload: dict = {"check": args.check}
    if args.check == "ur":
        if args.oracle:
            payload["result"] = is_uniquely_restricted_oracle(g, m)
        else:
            ok, witness = is_uniquely_restricted_fast(g, m)
            payload["result"] = ok
            if witness is not None:
                payload["witness"] = list(witness)
    else:
        payload["result"] = is_acyclic_matching(g, m)
    _emit(payload)
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    g = _load_graph(args.infile)
    stripped = 0
    if args.strip_isolated and g.vertex_count:
        isolated = {v for v in range(g.vertex_count) if g.degree(v) == 0}
        if isolated:
            g, _ = delete_vertices(g, isolated)
            stripped = len(isolated)
    if args.theorem == "1":
        delta = args.delta
        if delta is None:
            delta = degree_profile(g).max_degree if g.vertex_count else 1
        trace = construct_theorem1(g, max(delta, 1))
    elif args.theorem == "2":
        trace = construct_theorem2(g)
    else:
        delta = args.delta if args.delta is not None else 4
        trace = construct_theorem3(g, delta)
    payload = trace.to_json_dict()
    if stripped:
        payload["stripped_isolated"] = stripped
    _emit(payload)
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.family == "kdr":
        if args.a is None or args.b is None:
            raise GraphError("kdr requires --a and --b")
        g = complete_bipartite(args.a, args.b)
    elif args.family == "gk":
        if args.k is None:
            raise GraphError("gk requires --k")
        g = gk_gadget(args.k)
    else:
        if args.n is None or args.delta is None:
            raise GraphError("random requires --n and --delta")
        g = random_graph(args.n, args.delta, args.girth, seed)
    print(write_graph6(g))
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    text = _read_text(args.corpus)
    report = audit_corpus(
        text.splitlines(),
        solver_threshold=args.threshold,
        budget=args.budget,
        strict=args.strict,
        jobs=args.jobs,
    )
    print(report.to_csv() if args.format == "csv" else report.to_json())
    for err in report.input_errors:
        print(f"input error: {err}", file=sys.stderr)
    return report.exit_code(args.strict)


def _cmd_conjecture(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.which == "1":
        stats = conjecture1_scan(args.delta, args.samples, args.n, seed)
        _emit(stats.to_json_dict())
    else:
        buckets = conjecture2_scan(args.delta, args.girth_list, args.samples, args.n, seed)
        _emit({"buckets": [b.to_json_dict() for b in buckets]})
    return 0


_HANDLERS = {
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "construct": _cmd_construct,
    "generate": _cmd_generate,
    "audit": _cmd_audit,
    "conjecture": _cmd_conjecture,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (GraphError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
