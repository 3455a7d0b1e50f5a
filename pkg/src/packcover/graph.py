"""Multigraph values and the structural subroutines shared by the solvers.

Edge sets are passed around as Python ints used as bitmasks over edge
indices (bit ``i`` set means edge ``i`` is a member).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


@dataclass(frozen=True)
class MultiGraph:
    """Undirected loop-free multigraph on nodes ``0..n-1``.

    Edge indices are stable: parallel edges are distinct indices.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("node count must be nonnegative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {i} ({u},{v}) has an endpoint out of range")
            if u == v:
                raise ValueError(f"edge {i} is a loop at node {u}")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.edges)) - 1

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per node, the ``(neighbour, edge index)`` pairs in edge order."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return tuple(tuple(x) for x in inc)

    @cached_property
    def incidence_masks(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for i, (u, v) in enumerate(self.edges):
            masks[u] |= 1 << i
            masks[v] |= 1 << i
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def other(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        return w if u == v else u

    def neighbours(self, v: int) -> set[int]:
        return {w for w, _ in self.incidence[v]}

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for w, e in self.incidence[u] if w == v]

    def delta(self, side: Iterable[int]) -> int:
        """Mask of the edges with exactly one endpoint in ``side``."""
        inside = set(side)
        mask = 0
        for i, (u, v) in enumerate(self.edges):
            if (u in inside) != (v in inside):
                mask |= 1 << i
        return mask

    def subgraph_edges(self, keep: int) -> "MultiGraph":
        """Same node set, only the edges in mask ``keep`` (re-indexed in order)."""
        return MultiGraph(self.n, tuple(e for i, e in enumerate(self.edges) if keep >> i & 1))


# --------------------------------------------------------------------------
# bitmask helpers


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class DisjointSets:
    __slots__ = ("parent",)

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


def node_support(g: MultiGraph, mask: int) -> set[int]:
    """V(E'): nodes incident to at least one edge of the mask."""
    out: set[int] = set()
    for i in bits(mask):
        u, v = g.edges[i]
        out.add(u)
        out.add(v)
    return out


def is_acyclic(g: MultiGraph, mask: int) -> bool:
    ds = DisjointSets(g.n)
    for i in bits(mask):
        u, v = g.edges[i]
        if not ds.union(u, v):
            return False
    return True


def component_labels(g: MultiGraph, mask: int) -> list[int]:
    """Component representative of every node in the spanning subgraph (V, mask)."""
    ds = DisjointSets(g.n)
    for i in bits(mask):
        u, v = g.edges[i]
        ds.union(u, v)
    return [ds.find(v) for v in range(g.n)]


def count_components(g: MultiGraph, mask: int) -> int:
    return len(set(component_labels(g, mask)))


def is_connected_mask(g: MultiGraph, mask: int) -> bool:
    """True iff (V, mask) is connected."""
    return g.n <= 1 or count_components(g, mask) == 1


def find_circuit(g: MultiGraph, mask: int) -> list[int] | None:
    """Edge sequence of some circuit inside ``mask`` (walk order), or None."""
    ds = DisjointSets(g.n)
    chosen = 0
    for i in bits(mask):
        u, v = g.edges[i]
        if ds.union(u, v):
            chosen |= 1 << i
            continue
        path = path_in(g, chosen, u, v)
        assert path is not None
        return path[1] + [i]
    return None


def path_in(g: MultiGraph, mask: int, s: int, t: int) -> tuple[list[int], list[int]] | None:
    """BFS path from s to t using only edges of mask; lowest ids first.

    Returns (node sequence, edge sequence).
    """
    if s == t:
        return [s], []
    prev: dict[int, tuple[int, int]] = {s: (-1, -1)}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        for y, e in sorted(g.incidence[x]):
            if not mask >> e & 1 or y in prev:
                continue
            prev[y] = (x, e)
            if y == t:
                nodes, edges = [t], []
                while nodes[-1] != s:
                    px, pe = prev[nodes[-1]]
                    edges.append(pe)
                    nodes.append(px)
                return nodes[::-1], edges[::-1]
            queue.append(y)
    return None


def two_colouring(g: MultiGraph, mask: int | None = None) -> list[int] | None:
    """Proper 2-colouring of (V, mask) with colour 0 on each component's least node."""
    if mask is None:
        mask = g.full_mask
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, e in g.incidence[x]:
                if not mask >> e & 1:
                    continue
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return None
    return colour


# --------------------------------------------------------------------------
# operations


def is_connected(g: MultiGraph) -> bool:
    return is_connected_mask(g, g.full_mask)


def is_bipartite(g: MultiGraph) -> bool:
    return two_colouring(g) is not None


def bfs_levels(g: MultiGraph, root: int) -> dict[int, int]:
    if not 0 <= root < g.n:
        raise ValueError(f"root {root} out of range")
    level = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y, _ in g.incidence[x]:
            if y not in level:
                level[y] = level[x] + 1
                queue.append(y)
    return level


def cut_vertices(g: MultiGraph) -> set[int]:
    """Articulation nodes (iterative Tarjan; parallel edges handled by edge id)."""
    disc = [-1] * g.n
    low = [0] * g.n
    result: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.incidence[root]))]
        while stack:
            v, parent_edge, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == parent_edge:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, e, iter(g.incidence[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if u != root and low[v] >= disc[u]:
                    result.add(u)
        if root_children > 1:
            result.add(root)
    return result


def bridges(g: MultiGraph, mask: int) -> int:
    """Mask of the bridges of the spanning subgraph (V, mask)."""
    disc = [-1] * g.n
    low = [0] * g.n
    out = 0
    timer = 0
    for root in range(g.n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.incidence[root]))]
        while stack:
            v, parent_edge, it = stack[-1]
            advanced = False
            for w, e in it:
                if e == parent_edge or not mask >> e & 1:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, e, iter(g.incidence[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] > disc[u]:
                    out |= 1 << parent_edge
    return out


def nontrivial_two_edge_st_cut(g: MultiGraph, s: int, t: int) -> frozenset[int] | None:
    """Some X with {s} < X < V - t and exactly two edges leaving X, if one exists."""
    full = g.full_mask
    for e1 in range(g.m):
        for e2 in range(e1 + 1, g.m):
            labels = component_labels(g, full & ~(1 << e1) & ~(1 << e2))
            if labels[s] == labels[t]:
                continue
            comp_s = frozenset(v for v in range(g.n) if labels[v] == labels[s])
            not_t = frozenset(v for v in range(g.n) if labels[v] != labels[t])
            for x in (comp_s, not_t):
                if len(x) >= 2 and g.n - len(x) >= 2 and popcount(g.delta(x)) == 2:
                    return x
    return None


@dataclass(frozen=True)
class Reduction:
    """Result of a graph reduction with the bookkeeping needed to lift witnesses.

    ``edge_origin[i]`` lists the edges of the source graph that reduced edge
    ``i`` stands for, in walk order; ``node_origin[v]`` is the source node.
    """

    graph: MultiGraph
    edge_origin: tuple[tuple[int, ...], ...]
    node_origin: tuple[int, ...]
    parallel_sites: tuple[tuple[int, tuple[int, int]], ...] = ()

    def lift_mask(self, mask: int) -> int:
        out = 0
        for i in bits(mask):
            for e in self.edge_origin[i]:
                out |= 1 << e
        return out

    def node_of(self, original: int) -> int | None:
        try:
            return self.node_origin.index(original)
        except ValueError:
            return None


def suppress_low_degree(g: MultiGraph, keep: Iterable[int] = ()) -> Reduction:
    """Delete degree-0/1 nodes and splice out degree-2 nodes not in ``keep``.

    A degree-2 node whose two edges run to the same neighbour is left alone
    (splicing it would make a loop) and reported in ``parallel_sites``.
    """
    keep = set(keep)
    alive = set(range(g.n))
    # edge id -> (u, v, chain of original edges oriented u -> v)
    cur: dict[int, tuple[int, int, tuple[int, ...]]] = {
        i: (u, v, (i,)) for i, (u, v) in enumerate(g.edges)
    }
    inc: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for i, (u, v) in enumerate(g.edges):
        inc[u].add(i)
        inc[v].add(i)
    next_id = g.m

    def ends(e: int, v: int) -> tuple[int, tuple[int, ...]]:
        a, b, chain = cur[e]
        return (b, chain) if a == v else (a, chain[::-1])

    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            if v in keep or v not in alive:
                continue
            d = len(inc[v])
            if d <= 1:
                for e in inc[v]:
                    a, b, _ = cur.pop(e)
                    inc[a if a != v else b].discard(e)
                inc[v] = set()
                alive.discard(v)
                changed = True
            elif d == 2:
                e1, e2 = sorted(inc[v])
                a, chain1 = ends(e1, v)
                b, chain2 = ends(e2, v)
                if a == b:
                    continue
                # chain runs a -> v -> b
                chain = chain1[::-1] + chain2
                for e in (e1, e2):
                    cur.pop(e)
                inc[a].discard(e1)
                inc[b].discard(e2)
                inc[v] = set()
                alive.discard(v)
                cur[next_id] = (a, b, chain)
                inc[a].add(next_id)
                inc[b].add(next_id)
                next_id += 1
                changed = True

    nodes = sorted(alive)
    index = {v: i for i, v in enumerate(nodes)}
    order = sorted(cur, key=lambda e: min(cur[e][2]))
    new_edges = []
    origin = []
    for e in order:
        a, b, chain = cur[e]
        new_edges.append((index[a], index[b]))
        origin.append(chain)
    red = MultiGraph(len(nodes), tuple(new_edges))
    sites = []
    for v in range(red.n):
        if nodes[v] in keep or red.degree(v) != 2:
            continue
        (w1, f1), (w2, f2) = red.incidence[v]
        if w1 == w2:
            sites.append((v, (f1, f2)))
    return Reduction(red, tuple(origin), tuple(nodes), tuple(sites))


def contract(g: MultiGraph, x: Iterable[int]) -> Reduction:
    """Merge the nodes of ``x`` into one node (the last id); inner edges vanish."""
    xs = set(x)
    if not xs:
        raise ValueError("cannot contract an empty node set")
    rest = [v for v in range(g.n) if v not in xs]
    index = {v: i for i, v in enumerate(rest)}
    merged = len(rest)
    for v in xs:
        index[v] = merged
    new_edges = []
    origin = []
    for i, (u, v) in enumerate(g.edges):
        if u in xs and v in xs:
            continue
        new_edges.append((index[u], index[v]))
        origin.append((i,))
    node_origin = tuple(rest) + (min(xs),)
    return Reduction(MultiGraph(merged + 1, tuple(new_edges)), tuple(origin), node_origin)


def line_graph(g: MultiGraph) -> MultiGraph:
    """One node per edge; one edge per node of g and pair of distinct edges at it."""
    out = []
    for v in range(g.n):
        inc = [e for _, e in g.incidence[v]]
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                out.append((inc[a], inc[b]))
    return MultiGraph(g.m, tuple(out))


def induced_edges(g: MultiGraph, nodes: Sequence[int] | set[int]) -> int:
    inside = set(nodes)
    mask = 0
    for i, (u, v) in enumerate(g.edges):
        if u in inside and v in inside:
            mask |= 1 << i
    return mask
