"""Command-line interface.

Exit codes: 0 success (all checks passed), 1 a verification failed,
2 bad input (an unreadable or malformed document, or a limit exceeded).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import checks
from .catalog import CATALOG, MAX_RANDOM_EDGES, random_instance
from .document import GraphFormatError, metadata_of, parse, serialize
from .engine import DEFAULT_MAX_EDGES, TooLargeError, omega_k_polynomial, omega_recursive, omega_state_sum
from .medial import MAX_ORACLE_EDGES, OracleLimitError, build_medial
from .ops import EdgeOperationError
from .poly import VARS, MultiPoly
from .ribbon import RibbonGraph
from .special import pointed_penrose, topological_penrose, transition_poly


class InputError(Exception):
    pass


def _load(ref: str) -> tuple[str, RibbonGraph, bool | None]:
    path = Path(ref)
    if ref == "-":
        text = sys.stdin.read()
    elif path.exists():
        text = path.read_text()
    elif ref in CATALOG:
        inst = CATALOG[ref]
        return inst.name, inst.graph, inst.plane
    else:
        raise InputError(f"no such file or catalog instance: {ref}")
    G = parse(text)
    meta = metadata_of(text)
    return meta.get("name", path.stem if ref != "-" else "stdin"), G, meta.get("plane")


def _emit_poly(p: MultiPoly, as_json: bool) -> None:
    if as_json:
        print(json.dumps(p.to_records()))
    else:
        print(p.to_text())


def _parse_assignment(text: str) -> dict[str, int]:
    out = {}
    for part in filter(None, (s.strip() for s in text.split(","))):
        name, _, value = part.partition("=")
        name = name.strip()
        if name not in VARS or not value:
            raise InputError(f"bad assignment {part!r}; expected e.g. w=1,x=2,t=3")
        try:
            out[name] = int(value)
        except ValueError:
            raise InputError(f"bad integer in {part!r}") from None
    return out


def _omega(G: RibbonGraph, args) -> MultiPoly:
    if args.method == "statesum":
        return omega_state_sum(G, max_edges=args.max_edges, workers=args.workers).polynomial
    return omega_recursive(G).polynomial


def cmd_compute(args) -> int:
    _, G, _ = _load(args.file)
    _emit_poly(_omega(G, args), args.json)
    return 0


def cmd_omega_k(args) -> int:
    _, G, _ = _load(args.file)
    _emit_poly(omega_k_polynomial(G, args.method), args.json)
    return 0


def cmd_eval(args) -> int:
    _, G, _ = _load(args.file)
    _emit_poly(_omega(G, args).evaluate(_parse_assignment(args.at)), args.json)
    return 0


def cmd_special(args) -> int:
    _, G, _ = _load(args.file)
    if args.poly == "pointed-penrose":
        p = pointed_penrose(G)
    elif args.poly == "penrose":
        p = topological_penrose(G)
    else:
        vals = [s for s in (args.args or "").split(",") if s.strip()]
        if len(vals) != 3:
            raise InputError("transition needs --args alpha,beta,gamma")
        try:
            a, b, c = (int(v) for v in vals)
        except ValueError:
            raise InputError(f"bad integers in --args {args.args!r}") from None
        p = transition_poly(G, a, b, c)
    _emit_poly(p, args.json)
    return 0


def cmd_medial(args) -> int:
    _, G, _ = _load(args.file)
    print(json.dumps(build_medial(G).to_dict(), indent=2))
    return 0


def cmd_verify(args) -> int:
    targets = []
    if args.catalog or not args.file:
        targets.extend((i.name, i.graph, i.plane) for i in CATALOG.values())
    if args.file:
        targets.append(_load(args.file))
    suites = checks.SUITES if args.suite == "all" else (args.suite,)
    failed = 0
    for name, G, plane in targets:
        if len(G.nonsingular_edges) > args.max_edges:
            print(f"SKIP {name} ({len(G.nonsingular_edges)} edges > --max-edges)")
            continue
        run_suites = tuple(s for s in suites if s != "oracle" or G.num_edges <= args.max_oracle_edges)
        for res in checks.run(name, G, run_suites, plane):
            print(res.line())
            failed += not res.passed
    print(f"{'OK' if not failed else 'FAILED'}: {failed} failing check(s)")
    return 1 if failed else 0


def cmd_catalog(args) -> int:
    if args.emit:
        out = Path(args.emit)
        out.mkdir(parents=True, exist_ok=True)
        for inst in CATALOG.values():
            (out / f"{inst.name}.json").write_text(serialize(inst.graph, inst.name, inst.plane))
    for inst in CATALOG.values():
        k, b, g = inst.invariants
        print(f"{inst.name}\tV={inst.graph.num_vertices} E={inst.graph.num_edges} kappa={k} boundary={b} genus={g} "
              f"plane={str(inst.plane).lower()}\t{inst.description}")
    return 0


def cmd_random(args) -> int:
    try:
        G = random_instance(args.vertices, args.edges, args.seed, p_singular=args.singular, max_edges=args.max_edges)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(serialize(G, f"random-{args.vertices}-{args.edges}-{args.seed}"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ribbon-omega", description="Exact Omega polynomials of edge-point ribbon graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file", help="graph JSON document, '-' for stdin, or a catalog name")
        sp.add_argument("--json", action="store_true", help="print polynomial as JSON records")
        sp.add_argument("--method", choices=("recursive", "statesum"), default="recursive")
        sp.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES, help="state-sum edge limit")
        sp.add_argument("--workers", type=int, default=None, help="processes for the state sum")
        sp.set_defaults(func=func)
        return sp

    graph_cmd("compute", cmd_compute, "print Omega")
    graph_cmd("omega-k", cmd_omega_k, "print Omega_k with t standing for k")
    graph_cmd("eval", cmd_eval, "evaluate Omega at integers").add_argument(
        "--at", required=True, help="e.g. w=-2,x=1,y=0,z=1 (unassigned variables stay symbolic)"
    )
    sp = graph_cmd("special", cmd_special, "named specializations")
    sp.add_argument("--poly", required=True, choices=("pointed-penrose", "penrose", "transition"))
    sp.add_argument("--args", help="alpha,beta,gamma for the transition polynomial")

    sp = sub.add_parser("medial", help="print the medial graph as JSON")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_medial)

    sp = sub.add_parser("verify", help="run identity suites; exit 0 iff all pass")
    sp.add_argument("file", nargs="?")
    sp.add_argument("--catalog", action="store_true", help="include every catalog instance")
    sp.add_argument("--suite", choices=("all",) + checks.SUITES, default="all")
    sp.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    sp.add_argument("--max-oracle-edges", type=int, default=MAX_ORACLE_EDGES)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("catalog", help="list named instances")
    sp.add_argument("--emit", metavar="DIR", help="write each instance as DIR/NAME.json")
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("random", help="print a random graph document")
    sp.add_argument("--vertices", type=int, required=True)
    sp.add_argument("--edges", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--singular", type=float, default=0.0, help="probability an edge is singular")
    sp.add_argument("--max-edges", type=int, default=MAX_RANDOM_EDGES)
    sp.set_defaults(func=cmd_random)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphFormatError, EdgeOperationError, TooLargeError, OracleLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
