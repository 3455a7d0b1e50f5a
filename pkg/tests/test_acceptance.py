"""The ten acceptance criteria, each at its stated tolerance and time limit."""

import random
import time
from itertools import combinations, permutations, product

from helpers import (
    BRIDGED_CUBIC,
    K4,
    K4_DOUBLY_SUBDIVIDED,
    K4_MINUS_ST,
    K5,
    K33,
    PETERSEN,
    PRISM,
    hamiltonian_circuits_through,
    random_small_graph,
    report,
)
from packcover.dispatch import dispatch
from packcover.exact import Budget, enumerate_objects, solve_exact
from packcover.graph import MultiGraph, popcount
from packcover.matroid import (
    SubsetSumInstance,
    exact_cover,
    has_dependent_columns,
    khachyan_matrix,
    pad_to_2d_plus_2,
    vandermonde_and_alternant,
    vandermonde_closed_form,
    x3c_to_subset_sum,
)
from packcover.oracle import oracle
from packcover.reduce import Cnf3, Hypergraph3, hypergraph_to_cut_f, kotzig_instances, sat_to_c_spt
from packcover.reduce import sat_to_pst_spt, sat_to_t_spt, triangle_blowup, triangle_blowup_split
from packcover.witness import Kind, Terminals, catalogue, problem, verify_verdict, verify_witness, witness_from_edges

BIG = Budget(max_edges=400)


def _placements(g, prob):
    nodes = range(g.n)
    if prob.needs_st2:
        return [Terminals(s, t, s2, t2) for s, t, s2, t2 in product(nodes, repeat=4)]
    if prob.needs_st:
        return [Terminals(s, t) for s, t in product(nodes, repeat=2)]
    return [Terminals()]


def test_criterion_1_oracle_equivalence():
    rng = random.Random(20240601)
    start = time.perf_counter()
    mismatches = []
    checked = 0
    graphs = [random_small_graph(rng) for _ in range(10_000)]
    for k, g in enumerate(graphs):
        for prob in catalogue():
            if k < 100:
                placements = _placements(g, prob)
            else:
                placements = [Terminals(*(rng.randrange(g.n) for _ in range(4)))]
            for terminals in placements:
                ours = dispatch(g, prob, terminals)
                truth = oracle(g, prob, terminals)
                checked += 1
                if ours.answer != truth.answer or (ours.yes and not verify_verdict(g, prob, ours, terminals)):
                    mismatches.append((prob.name, g, terminals, ours.answer, truth.answer))
    elapsed = time.perf_counter() - start
    ok = not mismatches and elapsed <= 600
    report(1, ok, f"{len(graphs)} graphs, {checked} instances, {len(mismatches)} mismatches, {elapsed:.0f}s")
    assert not mismatches, mismatches[:5]
    assert elapsed <= 600


def test_criterion_2_exceptional_pst_c():
    start = time.perf_counter()
    prob = problem("pack:Pst,C")
    a = dispatch(K4_MINUS_ST, prob, Terminals(0, 1))
    b = dispatch(K4_DOUBLY_SUBDIVIDED, prob, Terminals(4, 5))
    elapsed = time.perf_counter() - start
    agree = (
        oracle(K4_MINUS_ST, prob, Terminals(0, 1)).answer == "no"
        and oracle(K4_DOUBLY_SUBDIVIDED, prob, Terminals(4, 5)).answer == "no"
    )
    ok = a.answer == b.answer == "no" and a.method == b.method == "poly" and agree and elapsed <= 1
    report(2, ok, f"K4-st {a.answer}, doubly subdivided K4 {b.answer}, {elapsed * 1000:.1f}ms")
    assert ok


def _min_degree_three_graph(rng: random.Random, n: int) -> MultiGraph:
    edges: set[tuple[int, int]] = set()
    deg = [0] * n
    while min(deg) < 3:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v and (min(u, v), max(u, v)) not in edges:
            edges.add((min(u, v), max(u, v)))
            deg[u] += 1
            deg[v] += 1
    return MultiGraph(n, tuple(sorted(edges)))


def test_criterion_3_two_circuits_threshold():
    rng = random.Random(7)
    prob = problem("pack:C,C")
    start = time.perf_counter()
    answers = []
    for _ in range(50):
        g = _min_degree_three_graph(rng, rng.randint(16, 40))
        v = dispatch(g, prob)
        answers.append(v.yes and verify_verdict(g, prob, v))
    k4 = dispatch(K4, prob).answer
    elapsed = time.perf_counter() - start
    ok = all(answers) and k4 == "no" and elapsed <= 10
    report(3, ok, f"{sum(answers)}/50 verified yes, K4 {k4}, {elapsed:.2f}s")
    assert ok


def test_criterion_4_matroid_rows():
    start = time.perf_counter()
    results = {}
    for name in ("part:SpT,SpT", "part:F,F", "pack:SpT,SpT"):
        v = dispatch(K4, name)
        results[f"K4 {name}"] = v.yes and v.method == "matroid" and verify_verdict(K4, problem(name), v)
    results["K5 part:F,F no"] = dispatch(K5, "part:F,F").answer == "no"
    rng = random.Random(1)
    for n in range(1, 9):
        tree = MultiGraph(n, tuple((rng.randrange(v), v) for v in range(1, n)))
        results[f"tree{n} pack:SpT,SpT no"] = dispatch(tree, "pack:SpT,SpT").answer == "no" or n == 1
    elapsed = time.perf_counter() - start
    ok = all(results.values()) and elapsed <= 1
    report(4, ok, f"{sum(results.values())}/{len(results)} rows hold, {elapsed * 1000:.1f}ms")
    assert ok, [k for k, v in results.items() if not v]


SPLIT_CHAIN = ("part:Cut,Pst", "part:Cut,P", "part:Cut,T", "cover:Cut,Pst", "cover:Cut,P", "part:Pst,F", "part:P,F")
BLOWUP_CHAIN = ("part:C,F", "part:Cut,C", "cover:Cut,C")


def test_criterion_5_blowup_chains():
    start = time.perf_counter()
    failures = []
    runs = 0
    for name, g in (("K4", K4), ("prism", PRISM), ("bridged cubic", BRIDGED_CUBIC)):
        expected = hamiltonian_circuits_through(g)
        gadget = triangle_blowup(g)
        for prob in BLOWUP_CHAIN:
            v = solve_exact(gadget.graph, problem(prob), budget=BIG)
            runs += 1
            if v.yes != expected or (v.yes and not verify_verdict(gadget.graph, problem(prob), v)):
                failures.append((name, prob, v.answer))
    for name, g, edges in (("K3,3", K33, (0,)), ("bridged cubic", BRIDGED_CUBIC, (0, 2, 4))):
        for e in edges:
            expected = hamiltonian_circuits_through(g, e)
            gadget = triangle_blowup_split(g, e)
            terminals = Terminals(gadget.s, gadget.t)
            for prob in SPLIT_CHAIN:
                v = solve_exact(gadget.graph, problem(prob), terminals, BIG)
                runs += 1
                if v.yes != expected or (v.yes and not verify_verdict(gadget.graph, problem(prob), v, terminals)):
                    failures.append((name, e, prob, v.answer))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed <= 120
    report(5, ok, f"{runs} gadget instances, {len(failures)} disagreements with Hamiltonicity, {elapsed:.1f}s")
    assert ok, failures


def test_criterion_6_line_graph_decomposition():
    start = time.perf_counter()
    prob = problem("part:C,C")
    k4 = solve_exact(kotzig_instances(K4)["L"].graph, prob, budget=Budget(max_edges=30))
    line = kotzig_instances(PETERSEN)["L"].graph
    petersen = solve_exact(line, prob, budget=Budget(max_edges=line.m, time_limit=600))
    elapsed = time.perf_counter() - start
    ok = k4.yes and verify_verdict(kotzig_instances(K4)["L"].graph, prob, k4) and petersen.answer == "no"
    report(6, ok and elapsed <= 600, f"L(K4) {k4.answer}, L(Petersen) {petersen.answer}, {elapsed:.2f}s")
    assert ok and elapsed <= 600


def _canonical_formula(n: int, clauses) -> tuple:
    """Smallest spelling under flipping variable signs and reordering literals and clauses."""
    best = None
    for flips in product((False, True), repeat=n):
        spelled = tuple(sorted(tuple(sorted((v, p != flips[v]) for v, p in c)) for c in clauses))
        if best is None or spelled < best:
            best = spelled
    return best


def small_formulas(limit: int = 200, seed: int = 5) -> list[Cnf3]:
    """Formulas with at most 3 variables and 3 clauses, every variable used, up to sign symmetry."""
    seen = set()
    pool = []
    for n in range(1, 4):
        literals = [(v, p) for v in range(n) for p in (True, False)]
        clause_forms = sorted({tuple(sorted(c)) for c in product(literals, repeat=3)})
        for m in range(1, 4):
            for clauses in combinations(clause_forms, m):
                if {v for c in clauses for v, _ in c} != set(range(n)):
                    continue
                key = (n, _canonical_formula(n, clauses))
                if key not in seen:
                    seen.add(key)
                    pool.append(Cnf3(n, key[1]))
    # keep every unsatisfiable formula, then fill up with a seeded sample
    unsat = [phi for phi in pool if not phi.satisfiable()]
    rest = [phi for phi in pool if phi.satisfiable()]
    rng = random.Random(seed)
    return unsat + rng.sample(rest, max(0, min(limit - len(unsat), len(rest))))


def test_criterion_7_sat_gadgets():
    start = time.perf_counter()
    formulas = small_formulas()
    failures = []
    for phi in formulas:
        g1 = sat_to_pst_spt(phi)
        a = solve_exact(g1.graph, problem("pack:Pst,SpT"), Terminals(g1.s, g1.t), BIG)
        g2 = sat_to_t_spt(phi)
        b = solve_exact(g2.graph, problem("part:T,SpT"), budget=BIG)
        g3 = sat_to_c_spt(phi)
        c = solve_exact(g3.graph, problem("pack:C,SpT"), budget=BIG)
        sat, one = phi.satisfiable(), phi.one_in_three()
        if (a.yes, b.yes, c.yes) != (sat, one, sat) or "budget_exceeded" in (a.answer, b.answer, c.answer):
            failures.append((phi, a.answer, b.answer, c.answer, sat, one))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed <= 600
    kinds = sum(f.satisfiable() for f in formulas), sum(f.one_in_three() for f in formulas)
    report(
        7,
        ok,
        f"{len(formulas)} formulas ({kinds[0]} satisfiable, {kinds[1]} one-in-three), "
        f"{len(failures)} mismatches, {elapsed:.1f}s",
    )
    assert ok, failures[:3]


def test_criterion_8_hypergraph_gadget():
    start = time.perf_counter()
    failures = []
    count = 0
    for nv in range(3, 6):
        triples = [frozenset(c) for c in combinations(range(nv), 3)]
        for k in range(1, 4):
            for edges in combinations(triples, k):
                h = Hypergraph3(nv, edges)
                gadget = hypergraph_to_cut_f(h).graph
                v = solve_exact(gadget, problem("part:Cut,F"), budget=BIG)
                count += 1
                if v.yes != (h.two_colouring() is not None) or gadget.m != 18 * k:
                    failures.append((nv, edges, v.answer))
    elapsed = time.perf_counter() - start
    report(8, not failures, f"{count} hypergraphs, {len(failures)} mismatches, {elapsed:.2f}s")
    assert not failures


def test_criterion_9_matrix_chain():
    start = time.perf_counter()
    rng = random.Random(9)
    failures = []
    for _ in range(300):
        n = rng.randint(1, 8)
        a = tuple(sorted(rng.sample(range(1, 51), n)))
        d = rng.randint(1, n)
        inst = SubsetSumInstance(a, rng.randint(1, 50 * d), d)
        mat = khachyan_matrix(inst)
        if (inst.solution() is not None) != (has_dependent_columns(mat, d + 1) is not None):
            failures.append(("khachyan", inst))
    vander = 0
    for k in range(1, 6):
        for x in permutations(range(-5, 6), k):
            vander += 1
            if vandermonde_and_alternant(x) != vandermonde_closed_form(x):
                failures.append(("vandermonde", x))
    x3c = 0
    for nv in (3, 6, 9):
        triples = [frozenset(c) for c in combinations(range(nv), 3)]
        for _ in range(40):
            h = Hypergraph3(nv, tuple(rng.sample(triples, rng.randint(1, min(len(triples), 10)))))
            padded = pad_to_2d_plus_2(h)
            inst = x3c_to_subset_sum(padded)
            mat = khachyan_matrix(inst)
            x3c += 1
            if len(padded.edges) != 2 * padded.vertex_count // 3 + 2 or mat.N != 2 * mat.D + 1:
                failures.append(("padding count", h))
            coverable = exact_cover(h) is not None
            if coverable != (exact_cover(padded) is not None):
                failures.append(("padding equivalence", h))
            if coverable != (has_dependent_columns(mat, mat.D) is not None):
                failures.append(("x3c chain", h))
    elapsed = time.perf_counter() - start
    report(
        9,
        not failures,
        f"300 subset-sum, {vander} Vandermonde, {x3c} X3C instances, {len(failures)} failures, {elapsed:.1f}s",
    )
    assert not failures, failures[:3]


def test_criterion_10_cut_circuit_parity():
    start = time.perf_counter()
    rng = random.Random(10)
    pairs = violations = 0
    while pairs < 100_000:
        g = random_small_graph(rng, max_n=8, max_m=14)
        circuits = [w for w in enumerate_objects(g, Kind.CIRCUIT) if verify_witness(g, w)]
        if not circuits or g.n < 2:
            continue
        for _ in range(250):
            side = frozenset(v for v in range(g.n) if rng.random() < 0.5)
            if not side or len(side) == g.n:
                continue
            cut = witness_from_edges(g, Kind.CUT, g.delta(side), side=side)
            assert verify_witness(g, cut)
            circuit = rng.choice(circuits)
            pairs += 1
            violations += popcount(cut.mask & circuit.mask) % 2
    elapsed = time.perf_counter() - start
    report(10, violations == 0, f"{pairs} cut/circuit pairs, {violations} odd intersections, {elapsed:.1f}s")
    assert violations == 0
