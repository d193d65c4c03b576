"""``partize`` command line.

Exit status: 0 for YES, 1 for NO, 2 for any error.  Machine output is JSON on
stdout; human-readable summaries go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import warnings
from pathlib import Path

from . import brute, generators, sat, split
from .graph import Graph, GraphError, find_odd_hole_or_antihole, parse_dimacs
from .hitting import branch_hitting_set, sunflower_kernel
from .oracles import DEFAULT_CAP, OracleError, UnsupportedGraph
from .partition import Solution, verify_solution
from .solver import solve

YES, NO, ERROR = 0, 1, 2

log = logging.getLogger("partize")


class CliError(Exception):
    pass


def load_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if text.lstrip().startswith("{"):
        return Graph.from_json(json.loads(text))
    return parse_dimacs(text)


def emit(obj: dict, pretty: bool = False) -> None:
    print(json.dumps(obj, indent=2 if pretty else None, sort_keys=False))


def write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def note(args, msg: str) -> None:
    if not args.json:
        print(msg, file=sys.stderr)


def _audit(g: Graph) -> None:
    cert = find_odd_hole_or_antihole(g)
    if cert is not None:
        cycle, kind = cert
        raise CliError(f"input is not perfect: odd {kind} on vertices {cycle}")


def cmd_solve(args, k: int | None = None) -> int:
    g = load_graph(args.graph)
    k = args.k if k is None else k
    if args.audit:
        _audit(g)
    sol = solve(g, args.r, args.l, k, cap=args.cap, memo=args.memo)
    out: dict = {"answer": "no"} if sol is None else {"answer": "yes", **sol.to_json()}
    if sol is not None:
        ok, why = verify_solution(g, args.r, args.l, k, sol)
        if not ok:
            raise CliError(f"internal error: solver certificate rejected ({why})")
    if args.oracle:
        ref = brute.brute_min_deletion(g, args.r, args.l, k)
        out["oracle"] = "no" if ref is None else "yes"
        if (ref is None) != (sol is None):
            emit(out)
            raise CliError(f"solver says {out['answer']}, brute-force oracle says {out['oracle']}")
    emit(out)
    note(args, f"n={g.n} m={g.m} (r,l,k)=({args.r},{args.l},{k}): {out['answer'].upper()}")
    return YES if sol is not None else NO


def cmd_recognize(args) -> int:
    return cmd_solve(args, k=0)


def cmd_reduce_sat(args) -> int:
    text = sys.stdin.read() if args.cnf == "-" else Path(args.cnf).read_text()
    phi = sat.parse_dimacs_cnf(text, strip_tautologies=args.strip_tautologies)
    inst = sat.build_instance(phi)
    if args.audit:
        if inst.graph.n > 14:
            note(args, f"audit on {inst.graph.n} vertices is exhaustive and may be slow")
        cert = sat.audit_perfect(inst)
        if cert is not None:
            raise CliError(f"reduced graph is not perfect: odd {cert[1]} {cert[0]}")
    out = {"r": inst.r, "l": inst.l, "vertices": inst.graph.n, "edges": inst.graph.m}
    if args.out:
        graph_path, label_path = f"{args.out}.dimacs", f"{args.out}.labels.json"
        Path(graph_path).write_text(inst.graph.to_dimacs())
        Path(label_path).write_text(inst.dumps_sidecar())
        out.update(graph=graph_path, labels=label_path)
    else:
        out.update(graph=inst.graph.to_json(), labels=inst.sidecar()["labels"])
    emit(out)
    note(args, f"(r, l) = ({inst.r}, {inst.l})")
    return YES


def cmd_kernelize(args) -> int:
    g = load_graph(args.graph)
    if args.strict and split.known_obstruction_bound(args.r, args.l) is None:
        raise split.IncompleteFamilyError(f"no certified-complete forbidden family for ({args.r}, {args.l})")
    fam = split.enumerate_forbidden_family(args.r, args.l, args.cap_family or _family_cap(args.r, args.l))
    split.check_complete(fam, strict=args.strict)
    system = split.extract_hitting_instance(g, fam)
    kern = sunflower_kernel(system, args.k, max(fam.d, 1))
    payload = kern.to_json()
    if args.out:
        Path(args.out).write_text(json.dumps(payload))
    if kern.verdict is False:
        answer, deletion = "no", None
    else:
        rest = branch_hitting_set(kern.system, kern.k)
        deletion = None if rest is None else sorted(kern.forced | rest)
        answer = "no" if deletion is None else "yes"
    out = {
        "answer": answer,
        "deleted": deletion,
        "family": {"r": args.r, "l": args.l, "d": fam.d, "members": len(fam.members), "complete": fam.complete},
        "sets": len(system),
        "kernel_sets": len(kern.system),
        "kernel_universe": len(set().union(*kern.system.sets)) if kern.system.sets else 0,
        "forced": sorted(kern.forced),
        "k": kern.k,
        "kernel_answer": payload["answer"],
    }
    if not args.out:
        out["kernel"] = payload
    emit(out)
    note(args, f"{len(system)} sets -> {len(kern.system)} after kernelisation; answer {answer.upper()}")
    return YES if answer == "yes" else NO


def _family_cap(r: int, l: int) -> int:
    bound = split.known_obstruction_bound(r, l)
    return bound if bound is not None and bound <= split.FAMILY_CAP else split.FAMILY_CAP


def cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    kind = args.kind
    if kind == "sat":
        phi = generators.random_cnf(args.vars, args.clauses, rng, args.min_width, args.max_width)
        write(args.out, phi.to_dimacs())
        return YES
    header = f"c partize gen {kind} seed={args.seed}\n"
    if kind == "chordal":
        g = generators.random_chordal(args.n, rng)
    elif kind == "bipartite":
        g = generators.random_bipartite(args.n1, args.n2, args.p, rng)
    elif kind == "random":
        g = generators.random_graph(args.n, args.p, rng)
    elif kind == "planted":
        n = args.n if args.n is not None else 20
        g, planted = generators.planted(n, args.r, args.l, args.k, rng, args.p)
        header += f"c planted r={args.r} l={args.l} k={args.k} deleted {' '.join(str(v + 1) for v in sorted(planted))}\n"
    else:
        raise CliError(f"unknown generator {kind!r}")
    write(args.out, header + g.to_dimacs())
    return YES


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    data = json.loads(Path(args.solution).read_text())
    if data.get("answer") == "no":
        raise CliError("solution file records a NO answer; nothing to verify")
    sol = Solution.from_json(data)
    ok, why = verify_solution(g, args.r, args.l, args.k, sol)
    emit({"valid": ok, "reason": why})
    return YES if ok else NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="partize", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, k=True):
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--l", type=int, required=True)
        if k:
            p.add_argument("--k", type=int, required=True)
        p.add_argument("--json", action="store_true", help="machine output only (no stderr summary)")

    p = sub.add_parser("solve", help="vertex partization by iterative compression")
    p.add_argument("graph")
    common(p)
    p.add_argument("--audit", action="store_true", help="reject non-perfect input (exhaustive)")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="generic-oracle vertex cap")
    p.add_argument("--memo", action="store_true", help="prune repeated failed search states")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("recognize", help="is the graph an (r, l)-graph?")
    p.add_argument("graph")
    common(p, k=False)
    p.add_argument("--audit", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--memo", action="store_true")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("reduce-sat", help="CNF formula -> (n, 1)-partition instance")
    p.add_argument("cnf")
    p.add_argument("--out", help="write OUT.dimacs and OUT.labels.json")
    p.add_argument("--audit", action="store_true")
    p.add_argument("--strip-tautologies", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce_sat)

    p = sub.add_parser("kernelize", help="forbidden-family hitting-set kernel")
    p.add_argument("graph")
    common(p)
    p.add_argument("--out", help="write the kernel JSON here")
    p.add_argument("--strict", action="store_true", help="fail if the family is not certified complete")
    p.add_argument("--cap", dest="cap_family", type=int, default=None, help="family enumeration cap")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("gen", help="seeded instance generators")
    p.add_argument("kind", choices=["chordal", "bipartite", "random", "planted", "sat"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int)
    p.add_argument("--n1", type=int, default=4)
    p.add_argument("--n2", type=int, default=4)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--vars", type=int, default=5)
    p.add_argument("--clauses", type=int, default=6)
    p.add_argument("--min-width", type=int, default=1)
    p.add_argument("--max-width", type=int, default=3)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="check a solution certificate")
    p.add_argument("graph")
    p.add_argument("solution")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else YES
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    for name in ("r", "l", "k", "n", "n1", "n2", "vars", "clauses"):
        val = getattr(args, name, None)
        if val is not None and val < 0:
            print(f"partize: --{name} must be non-negative", file=sys.stderr)
            return ERROR
    if args.command == "gen" and args.kind in ("chordal", "random") and args.n is None:
        print("partize: --n is required for this generator", file=sys.stderr)
        return ERROR
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            return args.func(args)
    except (CliError, GraphError, sat.CnfError, UnsupportedGraph, OracleError,
            brute.BudgetExceeded, split.BudgetExceeded, split.IncompleteFamilyError,
            OSError, ValueError) as exc:
        print(f"partize: error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
