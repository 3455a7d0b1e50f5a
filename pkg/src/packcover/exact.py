"""Exhaustive witness search for every catalogue problem at desk scale.

The engine enumerates one side (the "A" objects) with DFS and checks the
other side on the remaining edges.  Pruning only ever discards A-objects
that provably cannot lead to an answer, so a ``no`` is a real ``no``.  When
the time or size budget runs out the verdict is ``budget_exceeded``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import DisjointSets, MultiGraph, bits, find_circuit, path_in, popcount, two_colouring
from .witness import (
    Kind,
    Mode,
    Problem,
    Terminals,
    Verdict,
    Witness,
    cut_side,
    witness_from_edges,
)


@dataclass(frozen=True)
class Budget:
    max_edges: int = 24
    max_nodes: int = 16
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.max_edges <= 0 or self.max_nodes <= 0:
            raise ValueError("budget limits must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")


class BudgetExceeded(Exception):
    pass


class _Clock:
    __slots__ = ("deadline", "ticks")

    def __init__(self, time_limit: float | None) -> None:
        self.deadline = None if time_limit is None else time.monotonic() + time_limit
        self.ticks = 0

    def tick(self) -> None:
        self.ticks += 1
        if self.deadline is not None and self.ticks & 1023 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded


# --------------------------------------------------------------------------
# fast predicates on edge masks


def _dsu_of(g: MultiGraph, mask: int) -> tuple[DisjointSets, bool]:
    """Union all edges of mask; second value is True iff mask is acyclic."""
    ds = DisjointSets(g.n)
    acyclic = True
    edges = g.edges
    for i in bits(mask):
        u, v = edges[i]
        if not ds.union(u, v):
            acyclic = False
    return ds, acyclic


def _degree_list(g: MultiGraph, mask: int) -> list[int]:
    deg = [0] * g.n
    edges = g.edges
    for i in bits(mask):
        u, v = edges[i]
        deg[u] += 1
        deg[v] += 1
    return deg


def _st_connected(g: MultiGraph, mask: int, s: int, t: int) -> bool:
    if s == t:
        return True
    ds, _ = _dsu_of(g, mask)
    return ds.find(s) == ds.find(t)


def _has_circuit(g: MultiGraph, mask: int) -> bool:
    return not _dsu_of(g, mask)[1]


def _spans_connected(g: MultiGraph, mask: int) -> bool:
    if g.n <= 1:
        return True
    if popcount(mask) < g.n - 1:
        return False
    ds, _ = _dsu_of(g, mask)
    root = ds.find(0)
    return all(ds.find(v) == root for v in range(1, g.n))


def _contains_cut(g: MultiGraph, mask: int) -> bool:
    """Some cut lies inside mask iff removing mask disconnects the graph."""
    if g.n < 2:
        return False
    return not _spans_connected(g, g.full_mask & ~mask)


def _is_path(g: MultiGraph, mask: int, ends: tuple[int, int] | None = None) -> bool:
    if mask == 0:
        return ends is None or ends[0] == ends[1]
    if ends is not None and ends[0] == ends[1]:
        return False
    deg = _degree_list(g, mask)
    if max(deg) > 2:
        return False
    _, acyclic = _dsu_of(g, mask)
    if not acyclic:
        return False
    support = sum(1 for d in deg if d)
    if popcount(mask) != support - 1:
        return False
    if ends is None:
        return True
    s, t = ends
    return deg[s] == 1 and deg[t] == 1


def _is_circuit(g: MultiGraph, mask: int) -> bool:
    k = popcount(mask)
    if k < 2:
        return False
    deg = _degree_list(g, mask)
    if any(d not in (0, 2) for d in deg):
        return False
    support = sum(1 for d in deg if d)
    if support != k:
        return False
    ds, _ = _dsu_of(g, mask)
    roots = {ds.find(v) for v in range(g.n) if deg[v]}
    return len(roots) == 1


def _is_tree(g: MultiGraph, mask: int) -> bool:
    if mask == 0:
        return True
    ds, acyclic = _dsu_of(g, mask)
    if not acyclic:
        return False
    support = [v for v in range(g.n) if g.incidence_masks[v] & mask]
    return len({ds.find(v) for v in support}) == 1


def _is_spanning_tree(g: MultiGraph, mask: int) -> bool:
    return popcount(mask) == max(g.n - 1, 0) and _spans_connected(g, mask)


def is_kind(g: MultiGraph, kind: Kind, mask: int, terminals: Terminals = Terminals()) -> bool:
    """Membership test for an edge set, without auxiliary witness data."""
    if kind is Kind.PATH:
        return _is_path(g, mask)
    if kind in (Kind.PATH_ST, Kind.PATH_ST2):
        return _is_path(g, mask, terminals.pair(kind))
    if kind is Kind.CIRCUIT:
        return _is_circuit(g, mask)
    if kind is Kind.FOREST:
        return _dsu_of(g, mask)[1]
    if kind is Kind.TREE:
        return _is_tree(g, mask)
    if kind is Kind.SPANNING_TREE:
        return _is_spanning_tree(g, mask)
    return cut_side(g, mask) is not None


def _contains_kind(g: MultiGraph, kind: Kind, mask: int, terminals: Terminals) -> bool:
    """Does some object of the kind fit inside mask?"""
    if kind in (Kind.PATH, Kind.FOREST, Kind.TREE):
        return True
    if kind in (Kind.PATH_ST, Kind.PATH_ST2):
        return _st_connected(g, mask, *terminals.pair(kind))
    if kind is Kind.CIRCUIT:
        return _has_circuit(g, mask)
    if kind is Kind.SPANNING_TREE:
        return _spans_connected(g, mask)
    return _contains_cut(g, mask)


def _max_size(g: MultiGraph, kind: Kind) -> int:
    if kind is Kind.CUT:
        return g.m
    if kind is Kind.CIRCUIT:
        return g.n
    return max(g.n - 1, 0)


def _min_size(g: MultiGraph, kind: Kind, terminals: Terminals) -> int:
    if kind is Kind.CIRCUIT:
        return 2
    if kind is Kind.SPANNING_TREE:
        return max(g.n - 1, 0)
    if kind is Kind.CUT:
        return 1 if g.n >= 2 else g.m + 1
    if kind in (Kind.PATH_ST, Kind.PATH_ST2):
        s, t = terminals.pair(kind)
        return 0 if s == t else 1
    return 0


# --------------------------------------------------------------------------
# enumerators
#
# Each generator yields (mask, aux) where aux is the node sequence for
# paths/circuits, the side for cuts, and None otherwise.  ``prune(mask)``
# returning True discards the current partial object and all extensions.
# ``node_ok(v)`` is consulted when a node becomes an interior node of a
# walk; ``lo``/``hi`` bound the size of yielded objects.

Prune = Callable[[int], bool]


def _walks_from(
    g: MultiGraph,
    start: int,
    clock: _Clock,
    prune: Prune | None,
    node_ok: Callable[[int], bool] | None,
    hi: int,
    allowed_nodes: int,
    target: int | None,
) -> Iterator[tuple[int, list[int], list[int]]]:
    """All simple walks from start inside allowed_nodes (a node bitmask).

    Yields (edge mask, nodes, edges) for every walk with at least one edge;
    when ``target`` is given only walks ending there are yielded and walks
    never continue through it.
    """
    inc = g.incidence
    nodes = [start]
    edges: list[int] = []
    visited = 1 << start
    mask = 0
    stack = [iter(inc[start])]
    while stack:
        advanced = False
        cur = nodes[-1]
        for w, e in stack[-1]:
            if visited >> w & 1 or not allowed_nodes >> w & 1:
                continue
            if node_ok is not None and len(nodes) > 1 and not node_ok(cur):
                break
            clock.tick()
            new_mask = mask | (1 << e)
            if prune is not None and prune(new_mask):
                continue
            nodes.append(w)
            edges.append(e)
            mask = new_mask
            visited |= 1 << w
            if target is None or w == target:
                yield mask, nodes, edges
            if len(edges) < hi and w != target:
                stack.append(iter(inc[w]))
                advanced = True
                break
            nodes.pop()
            edges.pop()
            mask &= ~(1 << e)
            visited &= ~(1 << w)
        if advanced:
            continue
        stack.pop()
        if edges:
            w = nodes.pop()
            e = edges.pop()
            mask &= ~(1 << e)
            visited &= ~(1 << w)


def gen_st_paths(
    g: MultiGraph,
    s: int,
    t: int,
    clock: _Clock,
    prune: Prune | None = None,
    node_ok: Callable[[int], bool] | None = None,
    lo: int = 0,
    hi: int | None = None,
) -> Iterator[tuple[int, tuple[int, ...]]]:
    if s == t:
        if lo <= 0 and (prune is None or not prune(0)):
            yield 0, (s,)
        return
    hi = g.n - 1 if hi is None else hi
    everything = (1 << g.n) - 1
    for mask, nodes, edges in _walks_from(g, s, clock, prune, node_ok, hi, everything, t):
        if len(edges) >= lo:
            yield mask, tuple(nodes)


def gen_paths(
    g: MultiGraph,
    clock: _Clock,
    prune: Prune | None = None,
    node_ok: Callable[[int], bool] | None = None,
    lo: int = 0,
    hi: int | None = None,
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Every path once: the empty path, then walks from their smaller end."""
    hi = g.n - 1 if hi is None else hi
    if lo <= 0 and g.n and (prune is None or not prune(0)):
        yield 0, (0,)
    everything = (1 << g.n) - 1
    for u in range(g.n):
        for mask, nodes, edges in _walks_from(g, u, clock, prune, node_ok, hi, everything, None):
            if nodes[-1] > u and len(edges) >= lo:
                yield mask, tuple(nodes)


def gen_circuits(
    g: MultiGraph,
    clock: _Clock,
    prune: Prune | None = None,
    node_ok: Callable[[int], bool] | None = None,
    lo: int = 2,
    hi: int | None = None,
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Every circuit once, rooted at its least node.

    A walk r, v1, ..., vk closes with edge f back to r; the reverse
    orientation is skipped by requiring (v1, e0) < (vk, f).
    """
    hi = g.n if hi is None else hi
    lo = max(lo, 2)
    for r in range(g.n):
        allowed = ((1 << g.n) - 1) & ~((1 << (r + 1)) - 1) | (1 << r)
        for mask, nodes, edges in _walks_from(g, r, clock, prune, node_ok, hi - 1, allowed, None):
            last = nodes[-1]
            if len(edges) + 1 < lo:
                continue
            if node_ok is not None and not node_ok(last):
                continue
            for w, f in g.incidence[last]:
                if w != r or mask >> f & 1:
                    continue
                if (nodes[1], edges[0]) >= (last, f):
                    continue
                full = mask | (1 << f)
                if prune is not None and prune(full):
                    continue
                if node_ok is not None and not node_ok(r):
                    continue
                yield full, tuple(nodes)


def gen_trees(
    g: MultiGraph,
    clock: _Clock,
    prune: Prune | None = None,
    lo: int = 0,
    hi: int | None = None,
    include_empty: bool = True,
) -> Iterator[tuple[int, None]]:
    """Every tree (as an edge set) once; nonempty trees are grown from their least edge."""
    hi = max(g.n - 1, 0) if hi is None else hi
    if include_empty and lo <= 0 and (prune is None or not prune(0)):
        yield 0, None
    if hi <= 0:
        return
    edges = g.edges
    inc = g.incidence

    def grow(tree: int, nodes: int, size: int, frontier: list[int], banned: int, r: int):
        if size >= lo:
            yield tree, None
        if size >= hi:
            return
        for i, e in enumerate(frontier):
            clock.tick()
            if banned >> e & 1:
                continue
            u, v = edges[e]
            w = v if nodes >> u & 1 else u
            new_tree = tree | (1 << e)
            new_banned = banned
            for f in frontier[:i]:
                new_banned |= 1 << f
            if prune is not None and prune(new_tree):
                continue
            new_nodes = nodes | (1 << w)
            nxt = []
            for f in frontier[i + 1 :]:
                a, b = edges[f]
                if not (new_nodes >> a & 1 and new_nodes >> b & 1):
                    nxt.append(f)
            for x, f in inc[w]:
                if f > r and not new_banned >> f & 1 and not new_nodes >> x & 1:
                    nxt.append(f)
            yield from grow(new_tree, new_nodes, size + 1, nxt, new_banned, r)

    for r in range(g.m):
        clock.tick()
        root = 1 << r
        if prune is not None and prune(root):
            continue
        u, v = edges[r]
        nodes = (1 << u) | (1 << v)
        frontier = [f for x in (u, v) for y, f in inc[x] if f > r and not nodes >> y & 1]
        frontier.sort()
        yield from grow(root, nodes, 1, frontier, 0, r)


def gen_forests(
    g: MultiGraph,
    clock: _Clock,
    prune: Prune | None = None,
    lo: int = 0,
    hi: int | None = None,
) -> Iterator[tuple[int, None]]:
    """Every forest once, by include/exclude over edges in index order."""
    hi = max(g.n - 1, 0) if hi is None else hi
    m = g.m
    edges = g.edges

    def rec(i: int, mask: int, parent: list[int], size: int):
        clock.tick()
        if size + (m - i) < lo:
            return
        if i == m:
            yield mask, None
            return
        u, v = edges[i]
        ru, rv = _root(parent, u), _root(parent, v)
        if ru != rv and size < hi:
            new_mask = mask | (1 << i)
            if prune is None or not prune(new_mask):
                p2 = parent.copy()
                p2[ru] = rv
                yield from rec(i + 1, new_mask, p2, size + 1)
        yield from rec(i + 1, mask, parent, size)

    if prune is not None and prune(0):
        return
    yield from rec(0, 0, list(range(g.n)), 0)


def _root(parent: list[int], x: int) -> int:
    while parent[x] != x:
        x = parent[x]
    return x


def gen_cuts(
    g: MultiGraph,
    clock: _Clock,
    acyclic_rest: bool = False,
    connected_rest: bool = False,
) -> Iterator[tuple[int, frozenset[int]]]:
    """Cuts by 2-colouring the nodes, node 0 always on colour 0.

    Each nonempty proper side is produced once up to complement.  With
    ``acyclic_rest`` the monochromatic (uncut) edges must form a forest; with
    ``connected_rest`` also a tree (or no edges at all).  Both are checked
    incrementally as colours are assigned.
    """
    n = g.n
    if n < 2:
        return
    order = _bfs_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # nodes whose neighbourhood is fully coloured after position i
    closes: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        last = max([pos[v]] + [pos[w] for w, _ in g.incidence[v]])
        closes[last].append(v)
    colour = [-1] * n
    inc = g.incidence
    full = g.full_mask

    def rec(i: int, parent: list[int], mono: int, closed: int):
        clock.tick()
        if i == n:
            if any(colour[v] for v in range(n)):
                side = frozenset(v for v in range(n) if colour[v] == 0)
                yield full & ~mono, side
            return
        v = order[i]
        for c in ((0,) if i == 0 else (0, 1)):
            colour[v] = c
            p2 = parent
            m2 = mono
            ok = True
            if acyclic_rest or connected_rest:
                p2 = parent.copy()
                for w, e in inc[v]:
                    if colour[w] != c or pos[w] >= i:
                        continue
                    ra, rb = _root(p2, v), _root(p2, w)
                    if ra == rb:
                        ok = False
                        break
                    p2[ra] = rb
                    m2 |= 1 << e
            else:
                for w, e in inc[v]:
                    if colour[w] == c and pos[w] < i:
                        m2 |= 1 << e
            if not ok:
                continue
            c2 = closed
            for x in closes[i]:
                c2 |= 1 << x
            if connected_rest and not _open_components_ok(g, p2, m2, c2):
                continue
            yield from rec(i + 1, p2, m2, c2)
        colour[v] = -1

    yield from rec(0, list(range(n)), 0, 0)


def _open_components_ok(g: MultiGraph, parent: list[int], mono: int, closed: int) -> bool:
    """Monochromatic edges can still end up as a single tree."""
    comps: dict[int, bool] = {}
    for i in bits(mono):
        u, _ = g.edges[i]
        r = _root(parent, u)
        comps.setdefault(r, True)
    if len(comps) <= 1:
        return True
    for v in range(g.n):
        if not closed >> v & 1:
            r = _root(parent, v)
            if r in comps:
                comps[r] = False
    # a component all of whose nodes are closed can never merge again
    return all(not finished for finished in comps.values())


def _bfs_order(g: MultiGraph) -> list[int]:
    seen = [False] * g.n
    order = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        order.append(root)
        k = len(order) - 1
        while k < len(order):
            x = order[k]
            k += 1
            for y, _ in g.incidence[x]:
                if not seen[y]:
                    seen[y] = True
                    order.append(y)
    return order


# --------------------------------------------------------------------------
# solving

# Which side gets enumerated: the earlier kind in this list.
_ENUM_ORDER = (
    Kind.PATH_ST,
    Kind.PATH_ST2,
    Kind.CIRCUIT,
    Kind.PATH,
    Kind.TREE,
    Kind.CUT,
    Kind.SPANNING_TREE,
    Kind.FOREST,
)

# Containment checks that prune well during packing/partition search.
_PRUNE_KINDS = (Kind.PATH_ST, Kind.PATH_ST2, Kind.SPANNING_TREE, Kind.CUT, Kind.CIRCUIT)


def _choose_sides(prob: Problem) -> tuple[Kind, Kind]:
    a, b = prob.a, prob.b
    if _ENUM_ORDER.index(b) < _ENUM_ORDER.index(a):
        a, b = b, a
    return a, b


def _gen(
    g: MultiGraph,
    kind: Kind,
    terminals: Terminals,
    clock: _Clock,
    prune: Prune | None = None,
    node_ok: Callable[[int], bool] | None = None,
    lo: int = 0,
    hi: int | None = None,
) -> Iterator[tuple[int, object]]:
    if kind is Kind.PATH:
        return gen_paths(g, clock, prune, node_ok, lo, hi)
    if kind in (Kind.PATH_ST, Kind.PATH_ST2):
        s, t = terminals.pair(kind)
        return gen_st_paths(g, s, t, clock, prune, node_ok, lo, hi)
    if kind is Kind.CIRCUIT:
        return gen_circuits(g, clock, prune, node_ok, lo, hi)
    if kind is Kind.TREE:
        return gen_trees(g, clock, prune, lo, hi)
    if kind is Kind.SPANNING_TREE:
        size = max(g.n - 1, 0)
        if g.n <= 1:
            return iter([(0, None)] if lo <= 0 and (prune is None or not prune(0)) else [])
        return gen_forests(g, clock, prune, max(lo, size), size)
    if kind is Kind.FOREST:
        return gen_forests(g, clock, prune, lo, hi)
    return _filter_cuts(gen_cuts(g, clock), prune, lo, hi)


def _filter_cuts(it, prune: Prune | None, lo: int, hi: int | None):
    for mask, side in it:
        k = popcount(mask)
        if k < lo or (hi is not None and k > hi):
            continue
        if prune is not None and prune(mask):
            continue
        yield mask, side


def enumerate_objects(
    g: MultiGraph, kind: Kind, terminals: Terminals = Terminals(), budget: Budget = Budget()
) -> Iterator[Witness]:
    """Every object of the kind exactly once (cuts once per side pair)."""
    if g.m > budget.max_edges:
        raise BudgetExceeded(f"{g.m} edges exceed the budget of {budget.max_edges}")
    clock = _Clock(budget.time_limit)
    for mask, aux in _gen(g, kind, terminals, clock):
        side = aux if kind is Kind.CUT else None
        yield witness_from_edges(g, kind, mask, terminals, side)


def _find_inside(g: MultiGraph, kind: Kind, rest: int, terminals: Terminals):
    """Some object of the kind using only edges of rest: (mask, side) or None."""
    if kind in (Kind.PATH, Kind.FOREST, Kind.TREE):
        return 0, None
    if kind in (Kind.PATH_ST, Kind.PATH_ST2):
        s, t = terminals.pair(kind)
        found = path_in(g, rest, s, t)
        return None if found is None else (sum(1 << e for e in found[1]), None)
    if kind is Kind.CIRCUIT:
        found = find_circuit(g, rest)
        return None if found is None else (sum(1 << e for e in found), None)
    if kind is Kind.SPANNING_TREE:
        ds = DisjointSets(g.n)
        chosen = 0
        for i in bits(rest):
            u, v = g.edges[i]
            if ds.union(u, v):
                chosen |= 1 << i
        return (chosen, None) if popcount(chosen) == max(g.n - 1, 0) else None
    # cut: a component of what is left after removing rest
    if g.n < 2:
        return None
    ds, _ = _dsu_of(g, g.full_mask & ~rest)
    root = ds.find(0)
    side = frozenset(v for v in range(g.n) if ds.find(v) == root)
    if len(side) == g.n:
        return None
    return g.delta(side), side


class _CoverIndex:
    """Lazily materialised objects of one kind, for superset queries."""

    def __init__(self, g: MultiGraph, kind: Kind, terminals: Terminals, clock: _Clock) -> None:
        self.g, self.kind, self.terminals, self.clock = g, kind, terminals, clock
        self._masks: list[int] | None = None

    def superset_of(self, rest: int):
        g, kind = self.g, self.kind
        if kind is Kind.CUT:
            if g.n < 2:
                return None
            colour = two_colouring(g, rest)
            if colour is None:
                return None
            if not any(colour):
                colour[g.n - 1] = 1
            side = frozenset(v for v in range(g.n) if colour[v] == 0)
            return g.delta(side), side
        if kind in (Kind.FOREST, Kind.TREE, Kind.SPANNING_TREE):
            # only reachable outside the catalogue; fall through to the scan
            pass
        elif kind is not Kind.CIRCUIT or rest:
            deg = _degree_list(g, rest)
            if max(deg, default=0) > 2:
                return None
        if is_kind(g, kind, rest, self.terminals):
            return rest, None
        if self._masks is None:
            self._masks = [mask for mask, _ in _gen(g, kind, self.terminals, self.clock)]
        for mask in self._masks:
            if mask & rest == rest:
                return mask, None
        return None


def _interior_check(g: MultiGraph, b: Kind, terminals: Terminals) -> Callable[[int], bool] | None:
    """For partition into a walk A and a walk B: which nodes may be interior to A.

    An interior node of A keeps deg - 2 edges for B.
    """
    if b is Kind.CIRCUIT:
        allowed = {0, 2}
        return lambda v: g.degree(v) - 2 in allowed
    if b is Kind.PATH:
        return lambda v: g.degree(v) <= 4
    if b in (Kind.PATH_ST, Kind.PATH_ST2):
        s, t = terminals.pair(b)
        if s == t:
            return lambda v: g.degree(v) == 2
        ends = {s, t}
        return lambda v: g.degree(v) - 2 == 1 if v in ends else g.degree(v) - 2 in (0, 2)
    return None


def _search(g: MultiGraph, prob: Problem, terminals: Terminals, clock: _Clock):
    """Returns {kind-slot: (mask, side)} for the two objects, or None."""
    mode = prob.mode
    full = g.full_mask
    m = g.m
    kinds = {prob.a, prob.b}

    if mode is Mode.COVER and prob.a is Kind.CUT and prob.b is Kind.CUT:
        return _four_colour_cuts(g, clock)

    if mode is Mode.PART and Kind.CUT in kinds and kinds & {Kind.FOREST, Kind.TREE}:
        other = prob.b if prob.a is Kind.CUT else prob.a
        for cut, side in gen_cuts(g, clock, acyclic_rest=True, connected_rest=other is Kind.TREE):
            rest = full & ~cut
            if is_kind(g, other, rest, terminals):
                return (Kind.CUT, cut, side), (other, rest, None)
        return None

    a, b = _choose_sides(prob)
    prune = None
    node_ok = None
    lo, hi = 0, None
    if mode in (Mode.PACK, Mode.PART) and b in _PRUNE_KINDS:
        if not (mode is Mode.PART and b is Kind.CIRCUIT):
            prune = lambda mask: not _contains_kind(g, b, full & ~mask, terminals)  # noqa: E731
    if mode is Mode.PART:
        lo = max(0, m - _max_size(g, b))
        hi = m - _min_size(g, b, terminals)
        if hi < lo or hi < 0:
            return None
        if a.walk_aux:
            node_ok = _interior_check(g, b, terminals)
    elif mode is Mode.COVER:
        lo = max(0, m - _max_size(g, b))

    cover = _CoverIndex(g, b, terminals, clock) if mode is Mode.COVER else None
    for mask, aux in _gen(g, a, terminals, clock, prune, node_ok, lo, hi):
        rest = full & ~mask
        side_a = aux if a is Kind.CUT else None
        if mode is Mode.PACK:
            found = _find_inside(g, b, rest, terminals)
        elif mode is Mode.PART:
            found = (rest, None) if is_kind(g, b, rest, terminals) else None
        else:
            found = cover.superset_of(rest)
        if found is not None:
            return (a, mask, side_a), (b, found[0], found[1])
    return None


def _four_colour_cuts(g: MultiGraph, clock: _Clock):
    if g.n < 2:
        return None
    colour = four_colouring(g, clock)
    if colour is None:
        return None
    sides = []
    for bit in (2, 1):
        side = frozenset(v for v in range(g.n) if colour[v] & bit)
        if not side or len(side) == g.n:
            side = frozenset([0])
        sides.append(side)
    return (Kind.CUT, g.delta(sides[0]), sides[0]), (Kind.CUT, g.delta(sides[1]), sides[1])


def four_colouring(g: MultiGraph, clock: _Clock | None = None) -> list[int] | None:
    """Proper colouring with colours 0..3 by backtracking, highest degree first."""
    clock = clock or _Clock(None)
    order = sorted(range(g.n), key=lambda v: (-len(g.neighbours(v)), v))
    nbrs = [sorted(g.neighbours(v)) for v in range(g.n)]
    colour = [-1] * g.n

    def rec(i: int) -> bool:
        clock.tick()
        if i == len(order):
            return True
        v = order[i]
        used = {colour[w] for w in nbrs[v]}
        for c in range(4):
            if c in used:
                continue
            colour[v] = c
            if rec(i + 1):
                return True
        colour[v] = -1
        return False

    return colour if rec(0) else None


def _build_verdict(g: MultiGraph, prob: Problem, terminals: Terminals, found, method: str) -> Verdict:
    (ka, ma, sa), (kb, mb, sb) = found
    wa = witness_from_edges(g, ka, ma, terminals, sa)
    wb = witness_from_edges(g, kb, mb, terminals, sb)
    if ka is not prob.a:
        wa, wb = wb, wa
    return Verdict("yes", (wa, wb), method)


def check_terminals(g: MultiGraph, prob: Problem, terminals: Terminals) -> None:
    for kind in prob.kinds:
        if kind in (Kind.PATH_ST, Kind.PATH_ST2):
            for v in terminals.pair(kind):
                if not 0 <= v < g.n:
                    raise ValueError(f"terminal {v} is not a node")


def solve_exact(
    g: MultiGraph, prob: Problem, terminals: Terminals = Terminals(), budget: Budget = Budget()
) -> Verdict:
    """Decide any catalogue problem by exhaustive search within the budget."""
    check_terminals(g, prob, terminals)
    if g.m > budget.max_edges:
        return Verdict("budget_exceeded", None, "exact", f"{g.m} edges > budget {budget.max_edges}")
    clock = _Clock(budget.time_limit)
    try:
        found = _search(g, prob, terminals, clock)
    except BudgetExceeded:
        return Verdict("budget_exceeded", None, "exact", "time limit reached")
    if found is None:
        return Verdict("no", None, "exact")
    return _build_verdict(g, prob, terminals, found, "exact")


def solve_cut_cover_cut(g: MultiGraph, budget: Budget = Budget()) -> Verdict:
    """cover:Cut,Cut holds iff the graph is 4-colourable (and has two nodes)."""
    prob = Problem(Mode.COVER, Kind.CUT, Kind.CUT)
    clock = _Clock(budget.time_limit)
    try:
        found = _four_colour_cuts(g, clock)
    except BudgetExceeded:
        return Verdict("budget_exceeded", None, "exact", "time limit reached")
    if found is None:
        return Verdict("no", None, "exact")
    return _build_verdict(g, prob, Terminals(), found, "exact")


__all__ = [
    "Budget",
    "BudgetExceeded",
    "enumerate_objects",
    "four_colouring",
    "is_kind",
    "solve_cut_cover_cut",
    "solve_exact",
]
