"""Command-line entry point: solve, reduce, check and gen."""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import io
from .dispatch import dispatch
from .exact import Budget
from .graph import MultiGraph, is_connected
from .matroid import SubsetSumInstance, khachyan_matrix, pad_to_2d_plus_2, x3c_to_subset_sum
from .oracle import MAX_ORACLE_EDGES, oracle
from .reduce import (
    hypergraph_to_cut_f,
    kotzig_instances,
    sat_to_c_spt,
    sat_to_pst_spt,
    sat_to_t_spt,
    triangle_blowup,
    triangle_blowup_split,
)
from .witness import Problem, Terminals, Verdict, catalogue, problem

EXIT_YES = 0
EXIT_NO = 1
EXIT_BUDGET = 2
EXIT_ERROR = 3
EXIT_MISMATCH = 4

REDUCE_KINDS = (
    "triangle-blowup",
    "triangle-blowup-split",
    "kotzig",
    "sat-pst-spt",
    "sat-t-spt",
    "sat-c-spt",
    "hyp-cut-f",
    "khachyan",
    "x3c-chain",
)
MATRIX_TARGET = "matroid:dependent-columns"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Argument errors exit with the error code, keeping 2 free for budget exhaustion."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunReport:
    problem: str
    input_digest: str
    verdict: str
    witnesses: list | None
    method: str
    elapsed_ms: float | None

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True)


def input_digest(g: MultiGraph, prob: Problem, terminals: Terminals) -> str:
    """SHA-256 over the problem name, the canonical graph text and the terminals."""
    payload = "\n".join(
        [
            prob.name,
            io.emit_graph(g),
            json.dumps([terminals.s, terminals.t, terminals.s2, terminals.t2]),
        ]
    )
    return hashlib.sha256(payload.encode()).hexdigest()


def _report(g: MultiGraph, prob: Problem, terminals: Terminals, v: Verdict, elapsed_ms: float | None) -> RunReport:
    payload = v.to_json()
    return RunReport(prob.name, input_digest(g, prob, terminals), v.answer, payload["witnesses"], v.method, elapsed_ms)


def _read_graph(path: str) -> MultiGraph:
    return io.parse_graph(Path(path).read_text())


def _terminals(args: argparse.Namespace) -> Terminals:
    return Terminals(args.s, args.t, args.s2, args.t2)


def _add_terminal_flags(p: argparse.ArgumentParser) -> None:
    for flag in ("s", "t", "s2", "t2"):
        p.add_argument(f"--{flag}", type=int, default=None, help=f"terminal {flag}")


# --------------------------------------------------------------------------
# solve


def cmd_solve(args: argparse.Namespace) -> int:
    prob = problem(args.problem)
    g = _read_graph(args.graph)
    if not is_connected(g):
        raise UsageError("input graph is disconnected; only connected graphs are accepted")
    terminals = _terminals(args)
    budget = Budget(max_edges=args.budget_edges) if args.budget_edges is not None else Budget()
    start = time.perf_counter()
    v = dispatch(g, prob, terminals, budget)
    elapsed = None if args.no_timing else round((time.perf_counter() - start) * 1000, 3)
    report = _report(g, prob, terminals, v, elapsed)
    if args.json:
        print(report.to_json())
    else:
        print(f"{prob.name}: {v.answer} ({v.method})")
        for w in v.witnesses or ():
            print(f"  {w.kind.value}: edges {list(w.edges)}")
    return {"yes": EXIT_YES, "no": EXIT_NO}.get(v.answer, EXIT_BUDGET)


# --------------------------------------------------------------------------
# reduce


def _values(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _need(args: argparse.Namespace, name: str) -> str:
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--kind {args.kind} needs --{name.replace('_', '-')}")
    return value


def build_reduction(args: argparse.Namespace) -> tuple[str, str, dict]:
    """Run the requested construction; returns (format, text, side data with the target)."""
    kind = args.kind
    if kind in ("triangle-blowup", "triangle-blowup-split", "kotzig"):
        g = _read_graph(_need(args, "input"))
        if kind == "triangle-blowup":
            gadget, target = triangle_blowup(g), "part:C,F"
        elif kind == "triangle-blowup-split":
            gadget, target = triangle_blowup_split(g, args.edge), "part:Cut,Pst"
        else:
            gadget = kotzig_instances(g, args.edge)[args.variant]
            target = {"L": "part:C,C", "L_minus_st": "part:C,F", "L_prime": "part:P,F"}[args.variant]
    elif kind in ("sat-pst-spt", "sat-t-spt", "sat-c-spt"):
        phi = io.parse_cnf(Path(_need(args, "input")).read_text())
        build, target = {
            "sat-pst-spt": (sat_to_pst_spt, "pack:Pst,SpT"),
            "sat-t-spt": (sat_to_t_spt, "part:T,SpT"),
            "sat-c-spt": (sat_to_c_spt, "pack:C,SpT"),
        }[kind]
        gadget = build(phi)
    elif kind == "hyp-cut-f":
        h = io.parse_hypergraph(Path(_need(args, "input")).read_text())
        gadget, target = hypergraph_to_cut_f(h), "part:Cut,F"
    elif kind == "khachyan":
        inst = SubsetSumInstance(_values(_need(args, "values")), int(_need(args, "target")), int(_need(args, "d")))
        mat = khachyan_matrix(inst)
        side = {"target": MATRIX_TARGET, "dependent_columns": mat.D, "a": list(inst.a), "b": inst.b, "d": inst.d}
        return "matrix", io.emit_matrix(mat), side
    else:
        h = pad_to_2d_plus_2(io.parse_hypergraph(Path(_need(args, "input")).read_text()))
        inst = x3c_to_subset_sum(h)
        mat = khachyan_matrix(inst)
        side = {
            "target": MATRIX_TARGET,
            "dependent_columns": mat.D,
            "padded_vertex_count": h.vertex_count,
            "padded_edges": [sorted(e) for e in h.edges],
            "a": list(inst.a),
            "b": inst.b,
            "d": inst.d,
        }
        return "matrix", io.emit_matrix(mat), side
    side = gadget.to_json()
    side["target"] = target
    return "graph", io.emit_graph(gadget.graph), side


def cmd_reduce(args: argparse.Namespace) -> int:
    fmt, text, side = build_reduction(args)
    if args.out:
        out = Path(args.out)
        out.with_suffix(f".{fmt}").write_text(text)
        out.with_suffix(".json").write_text(json.dumps(side, sort_keys=True) + "\n")
        print(side["target"])
    else:
        print(json.dumps({"format": fmt, "data": text, **side}, sort_keys=True))
    return EXIT_YES


# --------------------------------------------------------------------------
# check


def cmd_check(args: argparse.Namespace) -> int:
    if args.max_edges > MAX_ORACLE_EDGES:
        raise UsageError(f"--max-edges may be at most {MAX_ORACLE_EDGES}")
    g = _read_graph(args.graph)
    if g.m > args.max_edges:
        raise UsageError(f"graph has {g.m} edges, above --max-edges {args.max_edges}")
    if not is_connected(g):
        raise UsageError("input graph is disconnected; only connected graphs are accepted")
    terminals = _terminals(args)
    probs = catalogue() if args.problem == "all" else [problem(args.problem)]
    mismatches = 0
    for prob in probs:
        if (prob.needs_st and terminals.s is None) or (prob.needs_st2 and terminals.s2 is None):
            if args.problem == "all":
                continue
        ours = dispatch(g, prob, terminals)
        truth = oracle(g, prob, terminals)
        agree = ours.answer == truth.answer
        mismatches += not agree
        line = {"problem": prob.name, "dispatch": ours.answer, "oracle": truth.answer, "agree": agree}
        print(json.dumps(line, sort_keys=True))
    return EXIT_MISMATCH if mismatches else EXIT_YES


# --------------------------------------------------------------------------
# gen


def cmd_gen(args: argparse.Namespace) -> int:
    text = io.emit_graph(io.generate(args.family))
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="packcover", description="Decide edge packing, partition and cover problems.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="decide one problem on one graph")
    p.add_argument("--problem", required=True, help="e.g. part:Cut,Cut or pack:Pst,C")
    p.add_argument("--graph", required=True, help="edge-list file")
    _add_terminal_flags(p)
    p.add_argument("--budget-edges", type=int, default=None, help="largest edge count for exhaustive search")
    p.add_argument("--json", action="store_true", help="print the run report as JSON")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as null for byte-stable output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="build a hardness gadget or matrix")
    p.add_argument("--kind", required=True, choices=REDUCE_KINDS)
    p.add_argument("--input", help="graph, DIMACS-like CNF or hypergraph file")
    p.add_argument("--edge", type=int, default=0, help="edge index for split and line-graph variants")
    p.add_argument("--variant", choices=("L", "L_minus_st", "L_prime"), default="L")
    p.add_argument("--values", help="subset-sum values a_1<...<a_n, comma separated")
    p.add_argument("--target", help="subset-sum target b")
    p.add_argument("--d", help="subset-sum selection size d")
    p.add_argument("--out", help="output prefix; writes PREFIX.graph or PREFIX.matrix and PREFIX.json")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("check", help="compare dispatch against the brute-force oracle")
    p.add_argument("--problem", required=True, help="problem name or 'all'")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-edges", type=int, default=MAX_ORACLE_EDGES)
    _add_terminal_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="write a named graph")
    p.add_argument("--family", required=True, help=", ".join(io.FAMILIES))
    p.add_argument("--out", help="output file (default: standard output)")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"packcover {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
