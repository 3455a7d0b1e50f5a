"""Polynomial-time deciders for the tractable catalogue entries.

Each solver returns a :class:`Verdict` whose ``yes`` witnesses are built
directly from the structure that makes the instance feasible.
"""

from __future__ import annotations

import logging

from .exact import Budget, solve_exact
from .graph import (
    MultiGraph,
    bits,
    contract,
    cut_vertices,
    find_circuit,
    induced_edges,
    is_acyclic,
    mask_of,
    nontrivial_two_edge_st_cut,
    path_in,
    popcount,
    suppress_low_degree,
    two_colouring,
)
from .matroid import GraphicMatroid, union_partition
from .witness import Kind, Mode, Problem, Terminals, Verdict, Witness, witness_from_edges

log = logging.getLogger(__name__)


def _yes(g: MultiGraph, pairs, terminals: Terminals, method: str) -> Verdict:
    ws = []
    for kind, mask, side in pairs:
        ws.append(witness_from_edges(g, kind, mask, terminals, side))
    return Verdict("yes", (ws[0], ws[1]), method)


def _no(method: str) -> Verdict:
    return Verdict("no", None, method)


def _cut_of(g: MultiGraph, side) -> tuple[Kind, int, frozenset[int]]:
    side = frozenset(side)
    return Kind.CUT, g.delta(side), side


# --------------------------------------------------------------------------
# cut rows


def solve_cut_plus_cut(g: MultiGraph) -> Verdict:
    """Two disjoint cuts covering E exist iff the graph is bipartite with at least 3 nodes."""
    colour = two_colouring(g)
    if colour is None or g.n < 3:
        return _no("table")
    classes = [[v for v in range(g.n) if colour[v] == c] for c in (0, 1)]
    big = classes[0] if len(classes[0]) >= 2 else classes[1]
    if len(big) < 2:
        # only reachable on a disconnected input; fall back to exact search
        return solve_exact(g, Problem(Mode.PART, Kind.CUT, Kind.CUT), Terminals())
    x, y = big[:1], big[1:]
    return _yes(g, [_cut_of(g, x), _cut_of(g, y)], Terminals(), "table")


def solve_cut_pack_cut(g: MultiGraph) -> Verdict:
    """Two disjoint cuts exist iff some two nodes are non-adjacent: take both stars."""
    adjacent = [set() for _ in range(g.n)]
    for u, v in g.edges:
        adjacent[u].add(v)
        adjacent[v].add(u)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v not in adjacent[u]:
                return _yes(g, [_cut_of(g, [u]), _cut_of(g, [v])], Terminals(), "table")
    return _no("table")


def solve_cut_pack_pst(g: MultiGraph, s: int, t: int) -> Verdict:
    """A cut avoiding some s-t path exists iff some third node is not needed to join s and t."""
    _check_nodes(g, s, t)
    terms = Terminals(s, t)
    if s == t:
        if g.n < 2:
            return _no("table")
        other = 1 if s == 0 else 0
        return _yes(g, [_cut_of(g, [other]), (Kind.PATH_ST, 0, None)], terms, "table")
    for v in range(g.n):
        if v in (s, t):
            continue
        rest = g.full_mask & ~g.incidence_masks[v]
        found = path_in(g, rest, s, t)
        if found is not None:
            return _yes(g, [_cut_of(g, [v]), (Kind.PATH_ST, mask_of(found[1]), None)], terms, "table")
    return _no("table")


def solve_cut_pack_c(g: MultiGraph) -> Verdict:
    """A cut avoiding some circuit exists unless the graph is a tree, a circuit, or two nodes."""
    for v in range(g.n):
        rest = g.full_mask & ~g.incidence_masks[v]
        circ = find_circuit(g, rest)
        if circ is not None:
            return _yes(g, [_cut_of(g, [v]), (Kind.CIRCUIT, mask_of(circ), None)], Terminals(), "table")
    return _no("table")


def cut_pack_c_exception(g: MultiGraph) -> bool:
    """The table's exceptional shapes: acyclic, a single circuit, or exactly two nodes."""
    if g.n <= 2 or is_acyclic(g, g.full_mask):
        return True
    return all(g.degree(v) == 2 for v in range(g.n))


def cut_pack_pst_exception(g: MultiGraph, s: int, t: int) -> bool:
    """Is the graph an s-t path whose edges may be multiplied?"""
    if s == t:
        return g.n < 2
    simple = {frozenset(e) for e in g.edges}
    if len(simple) != g.n - 1:
        return False
    deg = {v: 0 for v in range(g.n)}
    for e in simple:
        for v in e:
            deg[v] += 1
    return deg[s] == 1 and deg[t] == 1 and all(d == 2 for v, d in deg.items() if v not in (s, t))


def _check_nodes(g: MultiGraph, *nodes: int) -> None:
    for v in nodes:
        if not 0 <= v < g.n:
            raise ValueError(f"terminal {v} is not a node")


# --------------------------------------------------------------------------
# path and circuit packing


def solve_pst_pack_c(g: MultiGraph, s: int, t: int) -> Verdict:
    """An s-t path and an edge-disjoint circuit, by reduction to small base cases."""
    _check_nodes(g, s, t)
    found = _pst_c(g, s, t)
    if found is None:
        return _no("poly")
    path, circ = found
    return _yes(g, [(Kind.PATH_ST, path, None), (Kind.CIRCUIT, circ, None)], Terminals(s, t), "poly")


def _induced(g: MultiGraph, nodes) -> tuple[MultiGraph, list[int], list[int]]:
    """Induced subgraph with the new-to-old node and edge maps."""
    keep = sorted(nodes)
    index = {v: i for i, v in enumerate(keep)}
    edge_ids = [i for i, (u, v) in enumerate(g.edges) if u in index and v in index]
    sub = MultiGraph(len(keep), tuple((index[g.edges[i][0]], index[g.edges[i][1]]) for i in edge_ids))
    return sub, keep, edge_ids


def _lift(mask: int, edge_ids: list[int]) -> int:
    out = 0
    for i in bits(mask):
        out |= 1 << edge_ids[i]
    return out


def _components_without(g: MultiGraph, v: int) -> list[set[int]]:
    seen = {v}
    comps = []
    for root in range(g.n):
        if root in seen:
            continue
        comp = {root}
        seen.add(root)
        stack = [root]
        while stack:
            x = stack.pop()
            for y, _ in g.incidence[x]:
                if y not in seen:
                    seen.add(y)
                    comp.add(y)
                    stack.append(y)
        comps.append(comp)
    return comps


def _pst_c(g: MultiGraph, s: int, t: int) -> tuple[int, int] | None:
    """(path mask, circuit mask) in g's edge ids, or None."""
    full = g.full_mask
    if s == t:
        circ = find_circuit(g, full)
        return None if circ is None else (0, mask_of(circ))

    # a degree-1 terminal forces the first edge of the path
    for end, other in ((s, t), (t, s)):
        if g.degree(end) == 1:
            (nxt, e), = g.incidence[end]
            sub, keep, eids = _induced(g, [v for v in range(g.n) if v != end])
            if nxt == other:
                circ = find_circuit(g, full & ~(1 << e))
                return None if circ is None else (1 << e, mask_of(circ))
            inner = _pst_c(sub, keep.index(nxt), keep.index(other))
            if inner is None:
                return None
            return _lift(inner[0], eids) | (1 << e), _lift(inner[1], eids)

    red = suppress_low_degree(g, keep=(s, t))
    if red.parallel_sites:
        _, (f1, f2) = red.parallel_sites[0]
        pair = (1 << f1) | (1 << f2)
        rs, rt = red.node_of(s), red.node_of(t)
        found = path_in(red.graph, red.graph.full_mask & ~pair, rs, rt)
        assert found is not None
        return red.lift_mask(mask_of(found[1])), red.lift_mask(pair)
    if red.graph.n < g.n or red.graph.m < g.m:
        inner = _pst_c(red.graph, red.node_of(s), red.node_of(t))
        if inner is None:
            return None
        return red.lift_mask(inner[0]), red.lift_mask(inner[1])

    cuts = cut_vertices(g)
    if cuts:
        return _pst_c_split(g, s, t, min(cuts))

    x = nontrivial_two_edge_st_cut(g, s, t)
    if x is not None:
        return _pst_c_two_edge_cut(g, s, t, x)

    path = path_in(g, full, s, t)
    assert path is not None
    pmask = mask_of(path[1])
    circ = find_circuit(g, full & ~pmask)
    if circ is not None:
        return pmask, mask_of(circ)
    if g.n == 2 or _is_exceptional(g, s, t):
        # two nodes: every s-t path is one of the parallel edges
        return None
    # the case analysis should not reach here; settle it exhaustively
    log.warning("path/circuit base case on %d nodes is not exceptional; using exact search", g.n)
    v = solve_exact(g, Problem(Mode.PACK, Kind.PATH_ST, Kind.CIRCUIT), Terminals(s, t), Budget(max_edges=max(g.m, 1)))
    if not v.yes:
        return None
    wp, wc = v.witnesses
    return wp.mask, wc.mask


def _pst_c_split(g: MultiGraph, s: int, t: int, v: int) -> tuple[int, int] | None:
    comps = _components_without(g, v)

    def circuit_elsewhere(skip: list[set[int]]) -> int | None:
        for comp in comps:
            if any(comp is c for c in skip):
                continue
            circ = find_circuit(g, induced_edges(g, comp | {v}))
            if circ is not None:
                return mask_of(circ)
        return None

    def sub_solve(comp: set[int], a: int, b: int):
        sub, keep, eids = _induced(g, comp | {v})
        inner = _pst_c(sub, keep.index(a), keep.index(b))
        if inner is None:
            return None
        return _lift(inner[0], eids), _lift(inner[1], eids)

    def connect(comp: set[int], a: int, b: int) -> int:
        found = path_in(g, induced_edges(g, comp | {v}), a, b)
        assert found is not None
        return mask_of(found[1])

    ks = next((c for c in comps if s in c), None)
    kt = next((c for c in comps if t in c), None)
    if ks is None or kt is None or ks is kt:
        # both terminals in one piece (v may be one of them)
        k = ks if ks is not None else kt
        found = sub_solve(k, s, t)
        if found is not None:
            return found
        circ = circuit_elsewhere([k])
        if circ is None:
            return None
        return connect(k, s, t), circ
    # the path must pass through v
    found = sub_solve(ks, s, v)
    if found is not None:
        return found[0] | connect(kt, v, t), found[1]
    found = sub_solve(kt, v, t)
    if found is not None:
        return connect(ks, s, v) | found[0], found[1]
    circ = circuit_elsewhere([ks, kt])
    if circ is None:
        return None
    return connect(ks, s, v) | connect(kt, v, t), circ


def _pst_c_two_edge_cut(g: MultiGraph, s: int, t: int, x: frozenset[int]) -> tuple[int, int] | None:
    """The path crosses the two-edge cut once, so the circuit lies on one side."""
    inside = induced_edges(g, x)
    outside = induced_edges(g, set(range(g.n)) - x)

    # contract X into the source
    red = contract(g, x)
    merged = red.graph.n - 1
    inner = _pst_c(red.graph, merged, red.node_of(t))
    if inner is not None:
        path = red.lift_mask(inner[0])
        circ = red.lift_mask(inner[1])
        (e,) = [i for i in bits(path) if (g.edges[i][0] in x) != (g.edges[i][1] in x)]
        entry = g.edges[e][0] if g.edges[e][0] in x else g.edges[e][1]
        found = path_in(g, inside, s, entry)
        assert found is not None
        return path | mask_of(found[1]), circ

    # contract the rest into the sink
    rest = set(range(g.n)) - x
    red = contract(g, rest)
    merged = red.graph.n - 1
    inner = _pst_c(red.graph, red.node_of(s), merged)
    if inner is None:
        return None
    path = red.lift_mask(inner[0])
    circ = red.lift_mask(inner[1])
    (e,) = [i for i in bits(path) if (g.edges[i][0] in x) != (g.edges[i][1] in x)]
    exit_ = g.edges[e][0] if g.edges[e][0] in rest else g.edges[e][1]
    found = path_in(g, outside, exit_, t)
    assert found is not None
    return path | mask_of(found[1]), circ


def _is_exceptional(g: MultiGraph, s: int, t: int) -> bool:
    """K4 minus the edge st, or K4 with two opposite edges subdivided at s and t."""
    simple = len({frozenset(e) for e in g.edges}) == g.m
    if not simple:
        return False
    adj = [g.neighbours(v) for v in range(g.n)]
    if g.n == 4 and g.m == 5:
        return t not in adj[s]
    if g.n == 6 and g.m == 8:
        if g.degree(s) != 2 or g.degree(t) != 2 or adj[s] & adj[t]:
            return False
        a, b = sorted(adj[s])
        c, d = sorted(adj[t])
        if b in adj[a] or d in adj[c]:
            return False
        return all(y in adj[x] for x in (a, b) for y in (c, d))
    return False


def solve_c_pack_c(g: MultiGraph) -> Verdict:
    """Two edge-disjoint circuits."""
    found = _c_c(g)
    if found is None:
        return _no("poly")
    a, b = found
    return _yes(g, [(Kind.CIRCUIT, a, None), (Kind.CIRCUIT, b, None)], Terminals(), "poly")


def _c_c(g: MultiGraph) -> tuple[int, int] | None:
    red = suppress_low_degree(g)
    h = red.graph
    seen: dict[frozenset[int], int] = {}
    for i, (u, v) in enumerate(h.edges):
        key = frozenset((u, v))
        if key in seen:
            # a parallel pair is a circuit; two disjoint circuits exist iff the
            # rest still has one (if the two circuits split the pair, their
            # remainders form two distinct paths between the same ends)
            pair = (1 << seen[key]) | (1 << i)
            circ = find_circuit(h, h.full_mask & ~pair)
            if circ is None:
                return None
            return red.lift_mask(pair), red.lift_mask(mask_of(circ))
        seen[key] = i
    if h.n >= 16:
        short = _short_circuit(h)
        if short is not None:
            second = find_circuit(h, h.full_mask & ~short)
            if second is not None:
                return red.lift_mask(short), red.lift_mask(mask_of(second))
        log.warning("large-graph circuit pair construction failed on %d nodes", h.n)
    if h.m == 0:
        return None
    v = solve_exact(h, Problem(Mode.PACK, Kind.CIRCUIT, Kind.CIRCUIT), Terminals(), Budget(max_edges=max(h.m, 1)))
    if not v.yes:
        return None
    wa, wb = v.witnesses
    return red.lift_mask(wa.mask), red.lift_mask(wb.mask)


def _short_circuit(g: MultiGraph) -> int | None:
    """A shortest circuit through BFS from every node."""
    best = None
    for root in range(g.n):
        parent = {root: (-1, -1)}
        depth = {root: 0}
        order = [root]
        k = 0
        found = None
        while k < len(order) and found is None:
            x = order[k]
            k += 1
            for y, e in g.incidence[x]:
                if e == parent[x][1]:
                    continue
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent[y] = (x, e)
                    order.append(y)
                else:
                    found = (x, y, e)
                    break
        if found is None:
            continue
        x, y, e = found
        mask = _tree_path(parent, x, y) | (1 << e)
        if find_circuit(g, mask) is None:
            continue
        circ = mask_of(find_circuit(g, mask))
        if best is None or popcount(circ) < popcount(best):
            best = circ
    return best


def _tree_path(parent: dict[int, tuple[int, int]], x: int, y: int) -> int:
    def chain(v: int) -> list[tuple[int, int]]:
        out = []
        while v != -1:
            p, e = parent[v]
            out.append((v, e))
            v = p
        return out

    cx, cy = chain(x), chain(y)
    ancestors = {v for v, _ in cy}
    mask = 0
    for v, e in cx:
        if v in ancestors:
            lca = v
            break
        mask |= 1 << e
    for v, e in cy:
        if v == lca:
            break
        mask |= 1 << e
    return mask


# --------------------------------------------------------------------------
# matroid rows


def solve_f_plus_f(g: MultiGraph) -> Verdict:
    parts = union_partition(GraphicMatroid(g), 2, "forests")
    if parts is None:
        return _no("matroid")
    a, b = (mask_of(p) for p in parts)
    return _yes(g, [(Kind.FOREST, a, None), (Kind.FOREST, b, None)], Terminals(), "matroid")


def solve_spt_plus_spt(g: MultiGraph) -> Verdict:
    if g.m != 2 * max(g.n - 1, 0):
        return _no("matroid")
    return _two_bases(g)


def solve_spt_pack_spt(g: MultiGraph) -> Verdict:
    return _two_bases(g)


def _two_bases(g: MultiGraph) -> Verdict:
    mat = GraphicMatroid(g)
    if mat.rank() != max(g.n - 1, 0):
        return _no("matroid")
    parts = union_partition(mat, 2, "bases")
    if parts is None:
        return _no("matroid")
    a, b = (mask_of(p) for p in parts)
    return _yes(g, [(Kind.SPANNING_TREE, a, None), (Kind.SPANNING_TREE, b, None)], Terminals(), "matroid")


def solve_pst_pack_pst2(g: MultiGraph, s: int, t: int, s2: int, t2: int, budget: Budget = Budget()) -> Verdict:
    """No polynomial method is implemented here: exhaustive search within the budget."""
    return solve_exact(g, Problem(Mode.PACK, Kind.PATH_ST, Kind.PATH_ST2), Terminals(s, t, s2, t2), budget)


__all__ = [
    "Witness",
    "cut_pack_c_exception",
    "cut_pack_pst_exception",
    "solve_c_pack_c",
    "solve_cut_pack_c",
    "solve_cut_pack_cut",
    "solve_cut_pack_pst",
    "solve_cut_plus_cut",
    "solve_f_plus_f",
    "solve_pst_pack_c",
    "solve_pst_pack_pst2",
    "solve_spt_pack_spt",
    "solve_spt_plus_spt",
]
