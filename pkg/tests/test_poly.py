import random
from itertools import combinations

from hypothesis import given, settings

from helpers import (
    C3,
    C4,
    K4,
    K4_DOUBLY_SUBDIVIDED,
    K4_MINUS_ST,
    K5,
    PARALLEL2,
    PARALLEL3,
    THETA,
    connected_multigraphs,
    path3,
)
from packcover.exact import Budget, solve_exact
from packcover.graph import MultiGraph, induced_edges, is_connected, popcount
from packcover.oracle import oracle
from packcover.poly import (
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
from packcover.witness import Terminals, problem, verify_verdict

STAR3 = MultiGraph(4, ((0, 1), (0, 2), (0, 3)))


def _yes(g, name, v, terminals=Terminals()):
    assert v.yes, name
    assert verify_verdict(g, problem(name), v, terminals), name


def test_cut_plus_cut_rows():
    _yes(C4, "part:Cut,Cut", solve_cut_plus_cut(C4))
    assert solve_cut_plus_cut(C3).answer == "no"
    assert solve_cut_plus_cut(PARALLEL2).answer == "no"


def test_cut_pack_cut_rows():
    _yes(path3(), "pack:Cut,Cut", solve_cut_pack_cut(path3()))
    assert solve_cut_pack_cut(C3).answer == "no"
    assert solve_cut_pack_cut(K4).answer == "no"


def test_cut_pack_pst_rows():
    doubled = MultiGraph(3, ((0, 1), (0, 1), (1, 2)))
    assert solve_cut_pack_pst(doubled, 0, 2).answer == "no"
    _yes(C3, "pack:Cut,Pst", solve_cut_pack_pst(C3, 0, 1), Terminals(0, 1))
    _yes(STAR3, "pack:Cut,Pst", solve_cut_pack_pst(STAR3, 1, 2), Terminals(1, 2))


def test_cut_pack_c_rows():
    assert solve_cut_pack_c(STAR3).answer == "no"
    assert solve_cut_pack_c(PARALLEL3).answer == "no"
    assert solve_cut_pack_c(C4).answer == "no"
    _yes(THETA, "pack:Cut,C", solve_cut_pack_c(THETA))


def test_pst_pack_c_exceptional_graphs():
    assert solve_pst_pack_c(K4_MINUS_ST, 0, 1).answer == "no"
    assert solve_pst_pack_c(K4_DOUBLY_SUBDIVIDED, 4, 5).answer == "no"
    hanging = MultiGraph(4, ((0, 1), (1, 2), (2, 3), (3, 1)))
    _yes(hanging, "pack:Pst,C", solve_pst_pack_c(hanging, 0, 1), Terminals(0, 1))


def test_pst_pack_c_with_equal_terminals():
    _yes(C3, "pack:Pst,C", solve_pst_pack_c(C3, 1, 1), Terminals(1, 1))
    assert solve_pst_pack_c(path3(), 1, 1).answer == "no"


def test_c_pack_c_rows():
    bowtie = MultiGraph(5, ((0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)))
    _yes(bowtie, "pack:C,C", solve_c_pack_c(bowtie))
    assert solve_c_pack_c(K4).answer == "no"


def test_matroid_rows():
    _yes(K4, "part:F,F", solve_f_plus_f(K4))
    assert solve_f_plus_f(K5).answer == "no"
    _yes(STAR3, "part:F,F", solve_f_plus_f(STAR3))
    _yes(K4, "part:SpT,SpT", solve_spt_plus_spt(K4))
    assert solve_spt_plus_spt(C4).answer == "no"
    doubled_path = MultiGraph(3, ((0, 1), (0, 1), (1, 2), (1, 2)))
    _yes(doubled_path, "part:SpT,SpT", solve_spt_plus_spt(doubled_path))
    _yes(K4, "pack:SpT,SpT", solve_spt_pack_spt(K4))
    assert solve_spt_pack_spt(STAR3).answer == "no"
    doubled_triangle = MultiGraph(3, C3.edges + C3.edges)
    _yes(doubled_triangle, "pack:SpT,SpT", solve_spt_pack_spt(doubled_triangle))


def test_pst_pack_pst2_rows():
    # opposite pairs on C4 cross: every 0-2 path meets both routes from 1 to 3
    assert solve_pst_pack_pst2(C4, 0, 2, 1, 3).answer == "no"
    assert oracle(C4, problem("pack:Pst,Pst2"), Terminals(0, 2, 1, 3)).answer == "no"
    _yes(C4, "pack:Pst,Pst2", solve_pst_pack_pst2(C4, 0, 1, 2, 3), Terminals(0, 1, 2, 3))
    assert solve_pst_pack_pst2(path3(), 0, 2, 0, 2).answer == "no"
    _yes(K4, "pack:Pst,Pst2", solve_pst_pack_pst2(K4, 0, 1, 2, 3), Terminals(0, 1, 2, 3))


def test_c_pack_c_large_min_degree_three():
    rng = random.Random(11)
    for _ in range(5):
        n = rng.randint(16, 24)
        edges = set()
        deg = [0] * n
        while min(deg) < 3:
            u = min(range(n), key=lambda v: (deg[v], rng.random()))
            v = rng.choice([w for w in range(n) if w != u and (min(u, w), max(u, w)) not in edges])
            edges.add((min(u, v), max(u, v)))
            deg[u] += 1
            deg[v] += 1
        g = MultiGraph(n, tuple(sorted(edges)))
        _yes(g, "pack:C,C", solve_c_pack_c(g))


@settings(max_examples=60, deadline=None)
@given(connected_multigraphs(max_n=6, max_m=8))
def test_poly_rows_match_oracle(g):
    for s in range(g.n):
        for t in range(g.n):
            terminals = Terminals(s, t)
            for name, solve in (
                ("pack:Pst,C", lambda: solve_pst_pack_c(g, s, t)),
                ("pack:Cut,Pst", lambda: solve_cut_pack_pst(g, s, t)),
            ):
                v = solve()
                assert v.answer == oracle(g, problem(name), terminals).answer, (name, s, t)
                if v.yes:
                    assert verify_verdict(g, problem(name), v, terminals)
    for name, solve in (
        ("pack:C,C", solve_c_pack_c),
        ("pack:Cut,C", solve_cut_pack_c),
        ("pack:Cut,Cut", solve_cut_pack_cut),
        ("part:Cut,Cut", solve_cut_plus_cut),
        ("part:F,F", solve_f_plus_f),
        ("part:SpT,SpT", solve_spt_plus_spt),
        ("pack:SpT,SpT", solve_spt_pack_spt),
    ):
        v = solve(g)
        assert v.answer == oracle(g, problem(name), Terminals()).answer, name
        if v.yes:
            assert verify_verdict(g, problem(name), v)


@settings(max_examples=60, deadline=None)
@given(connected_multigraphs(max_n=6, max_m=8))
def test_forest_partition_density_bound(g):
    dense = any(
        popcount(induced_edges(g, set(x))) > 2 * (len(x) - 1)
        for k in range(1, g.n + 1)
        for x in combinations(range(g.n), k)
    )
    if dense:
        assert solve_f_plus_f(g).answer == "no"


def test_pst_pack_c_matches_exact_on_larger_graphs():
    rng = random.Random(3)
    for _ in range(300):
        n = rng.randint(5, 10)
        m = rng.randint(n, n + 6)
        edges = [tuple(rng.sample(range(n), 2)) for _ in range(m)]
        g = MultiGraph(n, tuple(edges))
        if not is_connected(g):
            continue
        s, t = rng.randrange(n), rng.randrange(n)
        exact = solve_exact(g, problem("pack:Pst,C"), Terminals(s, t), Budget(max_edges=40))
        assert solve_pst_pack_c(g, s, t).answer == exact.answer
        assert solve_c_pack_c(g).answer == solve_exact(g, problem("pack:C,C"), budget=Budget(max_edges=40)).answer
