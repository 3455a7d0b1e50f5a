import random

import pytest
from hypothesis import given, settings

from helpers import C3, C5, C6, K4, K5, connected_multigraphs, random_small_graph
from packcover.dispatch import dispatch, route_of
from packcover.exact import Budget, BudgetExceeded, enumerate_objects, four_colouring, solve_cut_cover_cut, solve_exact
from packcover.graph import MultiGraph
from packcover.io import generate
from packcover.oracle import oracle
from packcover.witness import CATALOGUE_NAMES, Kind, Mode, Problem, Terminals, catalogue, problem, verify_verdict


def _count(g, kind, terminals=Terminals()):
    return sum(1 for _ in enumerate_objects(g, kind, terminals))


def test_enumeration_counts():
    assert _count(C3, Kind.CIRCUIT) == 1
    assert _count(K4, Kind.SPANNING_TREE) == 16
    assert _count(C3, Kind.CUT) == 3
    assert _count(K4, Kind.CIRCUIT) == 7
    assert _count(K4, Kind.CUT) == 7


def test_enumeration_has_no_duplicates():
    g = MultiGraph(4, ((0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))
    for kind in Kind:
        masks = [w.mask for w in enumerate_objects(g, kind, Terminals(0, 2, 1, 3))]
        assert len(masks) == len(set(masks)), kind


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        next(enumerate_objects(K5, Kind.PATH, budget=Budget(max_edges=5)))


def test_solve_exact_examples():
    assert solve_exact(C6, problem("part:C,C")).answer == "no"
    doubled = MultiGraph(4, K4.edges + ((0, 1),))
    assert solve_exact(doubled, problem("cover:Cut,Cut")).answer == "yes"
    v = solve_exact(C3, problem("part:Pst,F"), Terminals(0, 1))
    assert v.yes and verify_verdict(C3, problem("part:Pst,F"), v, Terminals(0, 1))


def test_budget_exceeded_is_not_no():
    v = solve_exact(generate("petersen"), problem("part:T,SpT"), budget=Budget(max_edges=10))
    assert v.answer == "budget_exceeded"


def test_cut_cover_cut_is_four_colourability():
    assert solve_cut_cover_cut(K5).answer == "no"
    assert solve_cut_cover_cut(K4).answer == "yes"
    assert solve_cut_cover_cut(C5).answer == "yes"
    colours = four_colouring(generate("petersen"))
    assert colours is not None and all(colours[u] != colours[v] for u, v in generate("petersen").edges)


def test_oracle_examples():
    for prob in catalogue():
        terminals = Terminals(0, 1, 1, 2)
        assert oracle(C3, prob, terminals).answer == solve_exact(C3, prob, terminals).answer, prob.name
    assert oracle(K5, problem("part:F,F")).answer == "no"
    assert oracle(K4, problem("pack:C,C")).answer == "no"
    with pytest.raises(ValueError):
        oracle(generate("petersen"), problem("pack:C,C"))


def test_route_tags():
    assert dispatch(K4, "part:F,F").method == "matroid"
    assert route_of(problem("part:T,SpT")) == "exact"
    assert dispatch(K4, "part:T,SpT").method == "exact"
    assert route_of(problem("pack:Pst,C")) == "poly"
    assert dispatch(K4, "pack:Pst,C", Terminals(0, 1)).method == "poly"
    assert route_of(problem("cover:Cut,Cut")) == "colouring"


def test_dispatch_rejects_disconnected_and_missing_terminals():
    with pytest.raises(ValueError, match="connected"):
        dispatch(MultiGraph(2), "pack:C,C")
    with pytest.raises(ValueError):
        dispatch(K4, "pack:Pst,C")


def test_solve_exact_is_deterministic():
    rng = random.Random(5)
    for _ in range(30):
        g = random_small_graph(rng)
        for name in ("part:T,SpT", "cover:C,Cut", "part:P,Pst"):
            t = Terminals(0, g.n - 1)
            assert solve_exact(g, problem(name), t) == solve_exact(g, problem(name), t)


@settings(max_examples=40, deadline=None)
@given(connected_multigraphs())
def test_solve_exact_matches_oracle(g):
    terminals = Terminals(0, g.n - 1, g.n // 2, 0)
    for prob in catalogue():
        ours = solve_exact(g, prob, terminals)
        truth = oracle(g, prob, terminals)
        assert ours.answer == truth.answer, prob.name
        if ours.yes:
            assert verify_verdict(g, prob, ours, terminals)


@settings(max_examples=40, deadline=None)
@given(connected_multigraphs())
def test_partition_implies_cover(g):
    terminals = Terminals(0, g.n - 1, g.n - 1, 0)
    for name in CATALOGUE_NAMES:
        prob = problem(name)
        if prob.mode is not Mode.PART:
            continue
        cover = Problem(Mode.COVER, prob.a, prob.b)
        if cover.name not in CATALOGUE_NAMES and Problem(Mode.COVER, prob.b, prob.a).name not in CATALOGUE_NAMES:
            continue
        if solve_exact(g, prob, terminals).yes:
            assert oracle(g, cover, terminals).yes, name
