"""Route each catalogue problem to its polynomial method or to exhaustive search."""

from __future__ import annotations

from typing import Callable

from .exact import Budget, check_terminals, solve_cut_cover_cut, solve_exact
from .graph import MultiGraph, is_connected
from .poly import (
    solve_c_pack_c,
    solve_cut_pack_c,
    solve_cut_pack_cut,
    solve_cut_pack_pst,
    solve_cut_plus_cut,
    solve_f_plus_f,
    solve_pst_pack_c,
    solve_pst_pack_pst2,
    solve_spt_pack_spt,
    solve_spt_plus_spt,
)
from .witness import Problem, Terminals, Verdict, problem, verify_verdict

Route = Callable[[MultiGraph, Terminals, Budget], Verdict]

POLY_ROUTES: dict[str, Route] = {
    "part:F,F": lambda g, t, b: solve_f_plus_f(g),
    "part:SpT,SpT": lambda g, t, b: solve_spt_plus_spt(g),
    "pack:SpT,SpT": lambda g, t, b: solve_spt_pack_spt(g),
    "part:Cut,Cut": lambda g, t, b: solve_cut_plus_cut(g),
    "pack:Cut,Cut": lambda g, t, b: solve_cut_pack_cut(g),
    "pack:Cut,Pst": lambda g, t, b: solve_cut_pack_pst(g, t.s, t.t),
    "pack:Cut,C": lambda g, t, b: solve_cut_pack_c(g),
    "pack:Pst,C": lambda g, t, b: solve_pst_pack_c(g, t.s, t.t),
    "pack:C,C": lambda g, t, b: solve_c_pack_c(g),
    "pack:Pst,Pst2": lambda g, t, b: solve_pst_pack_pst2(g, t.s, t.t, t.s2, t.t2, b),
}


def route_of(prob: Problem) -> str:
    """Which family of method handles the problem: poly, cover-4-colouring, or exact."""
    if prob.name in POLY_ROUTES:
        return "poly"
    if prob.name == "cover:Cut,Cut":
        return "colouring"
    return "exact"


def dispatch(
    g: MultiGraph,
    prob: Problem | str,
    terminals: Terminals = Terminals(),
    budget: Budget = Budget(),
) -> Verdict:
    if isinstance(prob, str):
        prob = problem(prob)
    if not is_connected(g):
        raise ValueError("input graph must be connected")
    check_terminals(g, prob, terminals)
    if prob.name in POLY_ROUTES:
        verdict = POLY_ROUTES[prob.name](g, terminals, budget)
    elif prob.name == "cover:Cut,Cut":
        verdict = solve_cut_cover_cut(g, budget)
    else:
        verdict = solve_exact(g, prob, terminals, budget)
    if verdict.yes and not verify_verdict(g, prob, verdict, terminals):
        raise RuntimeError(f"{prob.name}: solver produced witnesses that do not verify")
    return verdict
