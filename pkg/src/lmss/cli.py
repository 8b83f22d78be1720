"""Command-line front end.

Every subcommand is a thin adapter over the library: parse inputs, call
one operation, format the result. Exit codes: 0 success (and, for check
and verify, a positive verdict), 1 negative verdict or failed chain,
2 any input or usage error.

Single-graph commands take one of --fixture, --graph6, --file, --gen.
Multi-graph commands (compose, verify) take ordered positional specs
written fixture:NAME, g6:STRING, file:PATH or gen:EXPR. Generator
expressions: complete:N, path:N, cycle:N, edgeless:N, tree:N, gnp:N:P.
The seeded kinds (tree, gnp) draw from --seed, default 0.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import graph as G
from .bitset import bits
from .graph import Graph
from .greedoid import accessibility_chain, is_greedoid
from .ops import CompositeGraph, composition, corona, disjoint_union, lexicographic_product, zykov_sum
from .rng import SplitMix64
from .stable import alpha, min_nonempty_size, psi
from .theorems import THEOREM_IDS, TheoremReport, run_on_instance, sweep


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _parse_gen_expr(expr: str, seed: int) -> Graph:
    if expr in G.FIXTURE_NAMES:
        return G.named_fixture(expr)
    parts = expr.split(":")
    kind = parts[0]
    try:
        if kind in ("complete", "path", "cycle", "edgeless", "tree") and len(parts) == 2:
            n = int(parts[1])
            if kind == "complete":
                return G.complete(n)
            if kind == "path":
                return G.path(n)
            if kind == "cycle":
                return G.cycle(n)
            if kind == "edgeless":
                return G.edgeless(n)
            return G.random_tree(n, seed)
        if kind == "gnp" and len(parts) == 3:
            n = int(parts[1])
            p = Fraction(parts[2])
            if not 0 <= p <= 1:
                raise ValueError("edge probability must be in [0, 1]")
            return G.random_graph(n, p.numerator, p.denominator, seed)
    except ValueError as exc:
        raise ValueError(f"bad generator expression {expr!r}: {exc}") from None
    raise ValueError(
        f"unknown generator expression {expr!r} "
        "(use complete:N, path:N, cycle:N, edgeless:N, tree:N, gnp:N:P or a fixture name)"
    )


def _read_graph_text(text: str) -> Graph:
    stripped = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    first = next((ln for ln in stripped if ln), "")
    if first.startswith("n ") or first == "n":
        return G.parse_edge_list_text(text)
    return G.parse_graph6(first)


def _load_file(path: str) -> Graph:
    if path == "-":
        return _read_graph_text(sys.stdin.read())
    with open(path, "r", encoding="ascii") as fh:
        return _read_graph_text(fh.read())


def _graph_from_flags(args) -> Graph:
    sources = [
        ("fixture", args.fixture),
        ("graph6", args.graph6),
        ("file", args.file),
        ("gen", args.gen),
    ]
    given = [(k, v) for k, v in sources if v is not None]
    if len(given) != 1:
        raise ValueError("exactly one of --fixture, --graph6, --file, --gen is required")
    kind, value = given[0]
    if kind == "fixture":
        return G.named_fixture(value)
    if kind == "graph6":
        return G.parse_graph6(value)
    if kind == "file":
        return _load_file(value)
    return _parse_gen_expr(value, args.seed)


def _graph_from_spec(spec: str, seed: int) -> Graph:
    kind, sep, rest = spec.partition(":")
    if not sep:
        raise ValueError(f"input spec {spec!r} needs a prefix fixture:, g6:, file: or gen:")
    if kind == "fixture":
        return G.named_fixture(rest)
    if kind == "g6":
        return G.parse_graph6(rest)
    if kind == "file":
        return _load_file(rest)
    if kind == "gen":
        return _parse_gen_expr(rest, seed)
    raise ValueError(f"unknown input spec prefix {kind!r}")


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fixture", metavar="NAME", help="named figure fixture")
    p.add_argument("--graph6", metavar="STR", help="graph6 string")
    p.add_argument("--file", metavar="PATH", help="graph6 or edge-list file, - for stdin")
    p.add_argument("--gen", metavar="EXPR", help="generator expression")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("plain", "json"), default="plain")
    p.add_argument("--seed", type=int, default=0, help="stream seed (default 0)")


# -- subcommands ---------------------------------------------------------------

def cmd_psi(args) -> int:
    g = _graph_from_flags(args)
    fam = psi(g)
    a = alpha(g)
    smallest = min_nonempty_size(fam)
    if args.format == "json":
        _emit_json({
            "graph6": G.to_graph6(g).decode("ascii"),
            "n": g.n,
            "alpha": a,
            "family_size": len(fam),
            "includes_empty": True,
            "psi_min_size": smallest,
            "members": [list(bits(m)) for m in fam],
        })
    else:
        print(f"graph: n={g.n} m={G.edge_count(g)}")
        print(f"alpha: {a}")
        print(f"psi_size: {len(fam)} (includes the empty set)")
        print(f"psi_min_size: {smallest if smallest is not None else 'none'}")
        for m in fam:
            print(G.format_vertex_set(m, g))
    return 0


def cmd_check(args) -> int:
    g = _graph_from_flags(args)
    verdict = is_greedoid(psi(g))
    if args.format == "json":
        _emit_json(verdict.as_dict())
    else:
        print(f"status: {verdict.status}")
        if verdict.witness_x is not None:
            print(f"witness_x: {G.format_vertex_set(verdict.witness_x, g)}")
        if verdict.witness_y is not None:
            print(f"witness_y: {G.format_vertex_set(verdict.witness_y, g)}")
        print(f"family_size: {verdict.family_size}")
        print(f"universe: {verdict.universe}")
    return 0 if verdict.holds else 1


def cmd_chain(args) -> int:
    g = _graph_from_flags(args)
    s = G.parse_vertex_set(args.set, g)
    fam = psi(g)
    try:
        chain = accessibility_chain(fam, s)
    except ValueError as exc:
        if args.format == "json":
            _emit_json({"ok": False, "error": str(exc)})
        else:
            print(f"no chain: {exc}")
        return 1
    if args.format == "json":
        _emit_json({"ok": True, "chain": [list(bits(m)) for m in chain]})
    else:
        print(" < ".join(G.format_vertex_set(m, g) for m in chain))
    return 0


_COMPOSE_OPS = ("union", "zykov", "corona", "compose", "lex")


def _compose(op: str, graphs: list[Graph]) -> CompositeGraph:
    if op == "union":
        return disjoint_union(graphs)
    if op == "zykov":
        return zykov_sum(graphs)
    if op == "corona":
        if not graphs:
            raise ValueError("corona needs a host graph followed by its satellites")
        return corona(graphs[0], graphs[1:])
    if op == "compose":
        if not graphs:
            raise ValueError("compose needs a skeleton graph followed by its parts")
        return composition(graphs[0], graphs[1:])
    if len(graphs) != 2:
        raise ValueError("lex needs exactly two graphs")
    return lexicographic_product(graphs[0], graphs[1])


def cmd_compose(args) -> int:
    graphs = [_graph_from_spec(s, args.seed) for s in args.inputs]
    comp = _compose(args.op, graphs)
    if args.format == "json":
        _emit_json({
            "graph6": G.to_graph6(comp.graph).decode("ascii"),
            "n": comp.graph.n,
            "offsets": list(comp.offsets),
            "part_of": list(comp.part_of),
            "index_in_part": list(comp.index_in_part),
            "host_vertices": list(bits(comp.host_vertices)),
        })
    else:
        print(f"graph6: {G.to_graph6(comp.graph).decode('ascii')}")
        if comp.host_vertices:
            print(f"host: {list(bits(comp.host_vertices))}")
        for i, g in enumerate(comp.operands):
            print(f"part {i}: offset {comp.offsets[i]} size {g.n}")
    return 0


def _report_line(r: TheoremReport) -> str:
    flag = "ok " if r.holds else "FAIL"
    desc = " ".join(f"{k}={v}" for k, v in sorted(r.inputs.items()))
    out = f"[{flag}] {r.theorem} {desc}"
    if not r.holds:
        out += f" witness={r.witness}"
    return out


def cmd_verify(args) -> int:
    theorem = args.theorem
    if theorem not in THEOREM_IDS:
        raise ValueError(f"unknown theorem id {theorem!r}; known: {', '.join(THEOREM_IDS)}")
    if args.inputs:
        graphs = [_graph_from_spec(s, args.seed) for s in args.inputs]
        if theorem in ("T1_NT", "T2_TREE"):
            if len(graphs) != 1:
                raise ValueError(f"{theorem} takes exactly one graph")
            instance: tuple = (graphs[0],)
        elif theorem in ("L3_CORONA", "T_CORONA"):
            host, rest = graphs[0], graphs[1:]
            if len(rest) != host.n:
                raise ValueError(f"host has {host.n} vertices but {len(rest)} satellites given")
            instance = (host, tuple(rest))
        elif theorem == "COR_CORONA":
            if len(graphs) != 2:
                raise ValueError("COR_CORONA takes a host and one satellite graph")
            instance = (graphs[0], graphs[1])
        else:
            if len(graphs) < 2:
                raise ValueError(f"{theorem} takes at least two graphs")
            instance = tuple(graphs)
        reports = [run_on_instance(theorem, instance)]
    else:
        reports = sweep(theorem, max_size=args.sweep, count=args.count,
                        seed=args.seed, exhaustive=args.exhaustive)
    if args.format == "json":
        _emit_json([r.as_dict() for r in reports])
    else:
        for r in reports:
            print(_report_line(r))
        ok = sum(1 for r in reports if r.holds)
        print(f"{ok}/{len(reports)} hold")
    return 0 if all(r.holds for r in reports) else 1


def cmd_gen(args) -> int:
    if args.count < 1:
        raise ValueError("--count must be positive")
    if args.count == 1:
        print(G.to_graph6(_parse_gen_expr(args.expr, args.seed)).decode("ascii"))
        return 0
    stream = SplitMix64(args.seed)
    for _ in range(args.count):
        g = _parse_gen_expr(args.expr, stream.next_u64())
        print(G.to_graph6(g).decode("ascii"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lmss",
        description="Local maximum stable set families, greedoid checks, graph compositions.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("psi", help="print the local maximum stable set family")
    _add_input_flags(p)
    _add_common(p)
    p.set_defaults(fn=cmd_psi)

    p = sub.add_parser("check", help="greedoid verdict for the family (exit 0/1)")
    _add_input_flags(p)
    _add_common(p)
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("chain", help="accessibility chain for a member set")
    _add_input_flags(p)
    p.add_argument("set", help='vertex set, e.g. "{0,2}" or "{e,g}" for fixtures')
    _add_common(p)
    p.set_defaults(fn=cmd_chain)

    p = sub.add_parser("compose", help="build union|zykov|corona|compose|lex")
    p.add_argument("op", choices=_COMPOSE_OPS)
    p.add_argument("inputs", nargs="+", metavar="SPEC",
                   help="fixture:NAME | g6:STR | file:PATH | gen:EXPR")
    _add_common(p)
    p.set_defaults(fn=cmd_compose)

    p = sub.add_parser("verify", help="machine-check a structural result")
    p.add_argument("theorem", metavar="THEOREM", help=", ".join(THEOREM_IDS))
    p.add_argument("inputs", nargs="*", metavar="SPEC",
                   help="explicit instance; omit to run a seeded sweep")
    p.add_argument("--sweep", type=int, default=10, metavar="N",
                   help="max composite size for sweep instances (default 10)")
    p.add_argument("--count", type=int, default=20, metavar="K",
                   help="number of sweep instances (default 20)")
    p.add_argument("--exhaustive", action="store_true",
                   help="exhaustive sweep (T1_NT corpus, T2_TREE all labeled trees)")
    _add_common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("gen", help="emit generators or fixtures as graph6")
    p.add_argument("expr", metavar="EXPR", help="generator expression or fixture name")
    p.add_argument("--count", type=int, default=1, metavar="K",
                   help="emit K seeded variants (default 1)")
    _add_common(p)
    p.set_defaults(fn=cmd_gen)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
