"""Command-line front end.

Exit codes: 0 success, 1 infeasible instance (or a rejected witness),
2 usage or parse error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import oracle
from .gf2_linalg import DEFAULT_NULLITY_CAP
from .graph_core import GENERATORS, Graph, GraphError, format_graph, generate, parse_graph
from .lamp_ev import IsolatedVertexError, ReductionInvariantError, build_gadget
from .lamp_vv_ee import InconsistentSystemError
from .matching import format_weighted, min_weight_perfect_matching, parse_weighted
from .report import PROBLEMS, VERTEX_PROBLEMS, solve, verify
from .suites import SUITES

EXIT_OK, EXIT_INFEASIBLE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {source}: {exc}") from None


def _detect_format(text: str) -> str:
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        return "dimacs" if line.split()[0] in ("p", "c") else "edgelist"
    return "edgelist"


def _load_graph(source: str, fmt: str) -> tuple[Graph, str]:
    text = _read(source)
    if fmt == "auto":
        fmt = _detect_format(text)
    return parse_graph(text, fmt), fmt


def _id_base(problem: str, fmt: str) -> int:
    # DIMACS vertex ids are 1-based; edge ids stay 0-based positions
    return 1 if fmt == "dimacs" and problem in VERTEX_PROBLEMS else 0


def _parse_witness(text: str) -> list[int]:
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
        return [int(x) for x in data["witness"]]
    ids = []
    for tok in stripped.split():
        try:
            ids.append(int(tok))
        except ValueError:
            raise UsageError(f"witness token {tok!r} is not an integer") from None
    return ids


def cmd_gen(args) -> int:
    params = []
    for p in args.params:
        try:
            params.append(int(p))
        except ValueError:
            params.append(float(p))
    g = generate(args.kind, *params, seed=args.seed)
    sys.stdout.write(format_graph(g, args.format))
    return EXIT_OK


def cmd_solve(args) -> int:
    g, fmt = _load_graph(args.graph, args.graph_format)
    rep = solve(g, args.problem, minimum=args.minimum, nullity_cap=args.nullity_cap)
    base = _id_base(args.problem, fmt)
    if base:
        rep.witness = [v + base for v in rep.witness]
        rep.diagnostics["id_base"] = base
    sys.stdout.write(rep.to_json() + "\n" if args.format == "json" else rep.to_text())
    return EXIT_OK if rep.feasible else EXIT_INFEASIBLE


def cmd_verify(args) -> int:
    g, fmt = _load_graph(args.graph, args.graph_format)
    base = _id_base(args.problem, fmt)
    witness = [x - base for x in _parse_witness(_read(args.witness))]
    ok = verify(g, args.problem, witness)
    sys.stdout.write("valid\n" if ok else "invalid\n")
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_reduce(args) -> int:
    g, _fmt = _load_graph(args.graph, args.graph_format)
    gadget = build_gadget(g)
    text = format_weighted(gadget.star)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    cross = gadget.cross_map_lines()
    map_path = args.map or (args.out + ".map" if args.out else None)
    if map_path:
        Path(map_path).write_text(cross)
    else:
        sys.stderr.write(cross)
    return EXIT_OK


def cmd_match(args) -> int:
    wg = parse_weighted(_read(args.graph))
    m = min_weight_perfect_matching(wg)
    if args.format == "json":
        payload = None if m is None else {
            "weight": m.total_weight,
            "edges": sorted(m.edges),
            "pairs": [list(wg.base.edges[e]) for e in sorted(m.edges)],
        }
        sys.stdout.write(json.dumps({"matching": payload}, sort_keys=True) + "\n")
    elif m is None:
        sys.stdout.write("none\n")
    else:
        lines = [f"weight {m.total_weight}"]
        lines += [f"{u} {v}" for u, v in (wg.base.edges[e] for e in sorted(m.edges))]
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if m is not None else EXIT_INFEASIBLE


def cmd_oracle(args) -> int:
    g, fmt = _load_graph(args.graph, args.graph_format)
    if args.problem == "ev":
        sols = oracle.brute_solutions_ev(g, nullity_cap=args.nullity_cap)
    else:
        sols = {"ve": oracle.brute_solutions_ve, "vv": oracle.brute_solutions_vv,
                "ee": oracle.brute_solutions_ee}[args.problem](g)
    base = _id_base(args.problem, fmt)
    rows = [sorted(x + base for x in s) for s in sols]
    if args.format == "json":
        sys.stdout.write(json.dumps({"problem": args.problem, "count": len(rows), "solutions": rows}) + "\n")
    else:
        sys.stdout.write(f"count {len(rows)}\n")
        sys.stdout.writelines(" ".join(map(str, r)) + "\n" for r in rows)
    return EXIT_OK if rows else EXIT_INFEASIBLE


def cmd_check(args) -> int:
    fn = SUITES[args.suite]
    accepted = inspect.signature(fn).parameters
    kwargs = {}
    if "seed" in accepted:
        kwargs["seed"] = args.seed
    if args.limit_n is not None:
        key = next((k for k in ("limit_n", "max_n") if k in accepted), None)
        if key is None:
            raise UsageError(f"suite {args.suite} does not take --limit-n")
        kwargs[key] = args.limit_n
    res = fn(**kwargs)
    sys.stdout.write(res.summary() + "\n")
    for msg in sorted(res.failures)[:20]:
        sys.stdout.write(f"  {msg}\n")
    return EXIT_OK if res.passed else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lamplight", description="Lamp-lighting problems on graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_arg(p):
        p.add_argument("graph", help="graph file, or - for stdin")
        p.add_argument("--graph-format", choices=("auto", "edgelist", "dimacs"), default="auto")

    p = sub.add_parser("gen", help="generate a graph")
    p.add_argument("kind", choices=sorted(GENERATORS))
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("edgelist", "dimacs"), default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve one lamp problem")
    p.add_argument("--problem", choices=PROBLEMS, required=True)
    p.add_argument("--minimum", action="store_true")
    p.add_argument("--nullity-cap", type=int, default=DEFAULT_NULLITY_CAP)
    p.add_argument("--format", choices=("text", "json"), default="text")
    graph_arg(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a witness")
    p.add_argument("--problem", choices=PROBLEMS, required=True)
    p.add_argument("--witness", required=True, help="JSON report from solve, or whitespace-separated ids")
    graph_arg(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="emit the weighted gadget graph and its cross-edge map")
    graph_arg(p)
    p.add_argument("--out", help="write the gadget here instead of stdout")
    p.add_argument("--map", help="cross-edge map file (default: OUT.map, or stderr)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("match", help="minimum-weight perfect matching of a weighted edge list")
    p.add_argument("graph")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("oracle", help="list every solution by brute force")
    p.add_argument("--problem", choices=PROBLEMS, required=True)
    p.add_argument("--nullity-cap", type=int, default=oracle.DEFAULT_NULLITY_CAP)
    p.add_argument("--format", choices=("text", "json"), default="text")
    graph_arg(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("check", help="run a theorem suite against the oracles")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--limit-n", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_check)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (ReductionInvariantError, InconsistentSystemError) as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except IsolatedVertexError as exc:
        sys.stderr.write(f"infeasible: {exc}\n")
        return EXIT_INFEASIBLE
    except (UsageError, GraphError, ValueError, TypeError, oracle.BudgetError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
