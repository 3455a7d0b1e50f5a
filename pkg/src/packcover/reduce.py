"""Gadget constructions turning hard source problems into catalogue instances.

Every builder returns a :class:`Gadget`: the graph plus a readable label for
each node (tuples such as ``("x", e, v)`` or ``("u", clause)``) and the
terminal ids where the target problem needs them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Sequence

from .graph import MultiGraph, line_graph
from .witness import Kind, Witness

Label = tuple


@dataclass(frozen=True)
class Gadget:
    graph: MultiGraph
    labels: tuple[Label, ...]
    s: int | None = None
    t: int | None = None
    kind: str = ""
    formula: "Cnf3 | None" = field(default=None, compare=False)

    def node(self, label: Label) -> int:
        return self._index[label]

    @property
    def _index(self) -> dict[Label, int]:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_index_cache", cached)
        return cached

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "labels": [list(lab) for lab in self.labels],
            "s": self.s,
            "t": self.t,
        }


class _Builder:
    def __init__(self) -> None:
        self.labels: list[Label] = []
        self.index: dict[Label, int] = {}
        self.edges: list[tuple[int, int]] = []

    def node(self, label: Label) -> int:
        if label not in self.index:
            self.index[label] = len(self.labels)
            self.labels.append(label)
        return self.index[label]

    def edge(self, a: Label, b: Label) -> None:
        self.edges.append((self.node(a), self.node(b)))

    def cycle(self, labels: Sequence[Label]) -> None:
        for i, lab in enumerate(labels):
            self.edge(lab, labels[(i + 1) % len(labels)])

    def build(self, kind: str, s: Label | None = None, t: Label | None = None, formula=None) -> Gadget:
        g = MultiGraph(len(self.labels), tuple(self.edges))
        si = None if s is None else self.index[s]
        ti = None if t is None else self.index[t]
        return Gadget(g, tuple(self.labels), si, ti, kind, formula)


def _require_cubic(g: MultiGraph) -> None:
    if any(g.degree(v) != 3 for v in range(g.n)):
        raise ValueError("graph must be 3-regular")


# --------------------------------------------------------------------------
# Hamiltonicity gadgets


def triangle_blowup(g: MultiGraph) -> Gadget:
    """Subdivide every edge twice around a middle node and blow a triangle into every node."""
    _require_cubic(g)
    b = _Builder()
    for e, (u, v) in enumerate(g.edges):
        b.edge(("x", e, u), ("x", e))
        b.edge(("x", e), ("x", e, v))
    for u in range(g.n):
        inc = sorted(e for _, e in g.incidence[u])
        for e, f in combinations(inc, 2):
            b.edge(("x", e, u), ("x", f, u))
    return b.build("triangle-blowup")


def triangle_blowup_split(g: MultiGraph, e: int) -> Gadget:
    """Blow-up with the middle node of edge e replaced by two pendant triangles."""
    _require_cubic(g)
    if not 0 <= e < g.m:
        raise ValueError(f"edge {e} does not exist")
    b = _Builder()
    for f, (u, v) in enumerate(g.edges):
        if f == e:
            b.node(("x", f, u))
            b.node(("x", f, v))
            continue
        b.edge(("x", f, u), ("x", f))
        b.edge(("x", f), ("x", f, v))
    for u in range(g.n):
        inc = sorted(f for _, f in g.incidence[u])
        for f1, f2 in combinations(inc, 2):
            b.edge(("x", f1, u), ("x", f2, u))
    for i, v in enumerate(g.edges[e], start=1):
        b.edge(("x", e, v), ("a", i))
        b.cycle([("a", i), ("b", i), ("c", i)])
    return b.build("triangle-blowup-split", ("c", 1), ("c", 2))


def kotzig_instances(g: MultiGraph, e: int = 0) -> dict[str, Gadget]:
    """Line-graph instances: L(G), L(G) minus one edge, and the parallel-edge variant.

    For ``L_prime`` the edge xy = e is replaced by x-x', y-y' and two
    parallel x'-y' edges; the two line-graph edges between those parallel
    edges are removed and their ends become the terminals.
    """
    _require_cubic(g)
    if not 0 <= e < g.m:
        raise ValueError(f"edge {e} does not exist")
    line = line_graph(g)
    labels = tuple(("e", i) for i in range(g.m))
    big = Gadget(line, labels, None, None, "line")
    s, t = line.edges[0]
    minus = Gadget(MultiGraph(line.n, line.edges[1:]), labels, s, t, "line-minus-edge")

    x, y = g.edges[e]
    xp, yp = g.n, g.n + 1
    edges = [uv for i, uv in enumerate(g.edges) if i != e]
    edge_labels: list[Label] = [("e", i) for i in range(g.m) if i != e]
    edges += [(x, xp), (y, yp), (xp, yp), (xp, yp)]
    edge_labels += [("xx'", e), ("yy'", e), ("e_xy", e), ("f_xy", e)]
    g2 = MultiGraph(g.n + 2, tuple(edges))
    line2 = line_graph(g2)
    s2, t2 = len(edges) - 2, len(edges) - 1
    keep = tuple(uv for uv in line2.edges if {uv[0], uv[1]} != {s2, t2})
    assert len(keep) == line2.m - 2
    prime = Gadget(MultiGraph(line2.n, keep), tuple(edge_labels), s2, t2, "line-prime")
    return {"L": big, "L_minus_st": minus, "L_prime": prime}


# --------------------------------------------------------------------------
# formulas


Literal = tuple[int, bool]  # (variable, is_positive)


@dataclass(frozen=True)
class Cnf3:
    variable_count: int
    clauses: tuple[tuple[Literal, ...], ...]

    def __post_init__(self) -> None:
        clauses = tuple(tuple((int(v), bool(p)) for v, p in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for c in clauses:
            if len(c) != 3:
                raise ValueError("every clause needs exactly 3 literals")
            for v, _ in c:
                if not 0 <= v < self.variable_count:
                    raise ValueError(f"variable {v} out of range")

    def occurrences(self, j: int, positive: bool) -> list[tuple[int, int]]:
        """(clause, position) of every occurrence of the literal, in clause order."""
        return [(i, p) for i, c in enumerate(self.clauses) for p, lit in enumerate(c) if lit == (j, positive)]

    def k(self, j: int) -> int:
        return len(self.occurrences(j, True))

    def l(self, j: int) -> int:  # noqa: E743
        return len(self.occurrences(j, False))

    def true_count(self, clause: Sequence[Literal], tau: Sequence[bool]) -> int:
        return sum(1 for v, p in clause if tau[v] == p)

    def satisfied_by(self, tau: Sequence[bool]) -> bool:
        return all(self.true_count(c, tau) >= 1 for c in self.clauses)

    def one_in_three_by(self, tau: Sequence[bool]) -> bool:
        """Exactly one true literal occurrence in every clause."""
        return all(self.true_count(c, tau) == 1 for c in self.clauses)

    def assignments(self):
        return product((False, True), repeat=self.variable_count)

    def satisfiable(self) -> bool:
        return any(self.satisfied_by(tau) for tau in self.assignments())

    def one_in_three(self) -> bool:
        return any(self.one_in_three_by(tau) for tau in self.assignments())

    def with_tautologies(self) -> "Cnf3":
        """Prefix a clause (x_j or x_j or not x_j) for every variable."""
        extra = tuple(((j, True), (j, True), (j, False)) for j in range(self.variable_count))
        return Cnf3(self.variable_count, extra + self.clauses)


def _formula_graph(phi: Cnf3) -> _Builder:
    for j in range(phi.variable_count):
        if not phi.occurrences(j, True) and not phi.occurrences(j, False):
            raise ValueError(f"variable {j} does not occur")
    b = _Builder()
    for i, clause in enumerate(phi.clauses):
        for p in range(len(clause)):
            b.edge(("u", i), ("w", i, p))
            b.edge(("w", i, p), ("v", i, p))
    n = phi.variable_count
    for j in range(n):
        pos = [("v", i, p) for i, p in phi.occurrences(j, True)]
        neg = [("v", i, p) for i, p in phi.occurrences(j, False)]
        ring = [("z", j, 1)] + pos + [("wv", j, 1, True), ("z", j, 2), ("wv", j, 1, False)] + neg[::-1]
        b.cycle(ring)
    for j in range(n - 1):
        b.edge(("z", j, 2), ("z", j + 1, 1))
    spine = [("wv", j, 3, sign) for j in range(n) for sign in (True, False)]
    for a, c in zip(spine, spine[1:]):
        b.edge(a, c)
    for j in range(n):
        for sign in (True, False):
            b.edge(("wv", j, 1, sign), ("wv", j, 2, sign))
            b.edge(("wv", j, 2, sign), ("wv", j, 3, sign))
    return b


def sat_to_pst_spt(phi: Cnf3) -> Gadget:
    b = _formula_graph(phi)
    return b.build("sat-pst-spt", ("z", 0, 1), ("z", phi.variable_count - 1, 2), phi)


def sat_to_t_spt(phi: Cnf3) -> Gadget:
    """Formula graph with both edges at s and at t subdivided and the new pairs joined."""
    b = _formula_graph(phi)
    s = b.index[("z", 0, 1)]
    t = b.index[("z", phi.variable_count - 1, 2)]
    for term, name in ((s, "s"), (t, "t")):
        at = [i for i, (u, v) in enumerate(b.edges) if term in (u, v)]
        assert len(at) == 2
        mids = []
        for k, i in enumerate(at, start=1):
            u, v = b.edges[i]
            other = v if u == term else u
            mid = b.node((name, k))
            b.edges[i] = (term, mid)
            b.edges.append((mid, other))
            mids.append(mid)
        b.edges.append((mids[0], mids[1]))
    return b.build("sat-t-spt", ("z", 0, 1), ("z", phi.variable_count - 1, 2), phi)


def sat_to_c_spt(phi: Cnf3) -> Gadget:
    """Formula graph of the tautology-prefixed formula plus the edge st."""
    phi2 = phi.with_tautologies()
    b = _formula_graph(phi2)
    b.edge(("z", 0, 1), ("z", phi.variable_count - 1, 2))
    return b.build("sat-c-spt", ("z", 0, 1), ("z", phi.variable_count - 1, 2), phi2)


def assignment_path(phi: Cnf3, tau: Sequence[bool], host: Gadget) -> Witness:
    """The s-t path that walks each variable ring on the side of its false literal."""
    if len(tau) != phi.variable_count:
        raise ValueError("assignment length does not match the variable count")
    formula = phi.with_tautologies() if host.kind == "sat-c-spt" else phi
    if host.formula is not None and host.formula != formula:
        raise ValueError("host was built from a different formula")
    seq: list[Label] = []
    for j in range(formula.variable_count):
        if tau[j]:
            side = [("v", i, p) for i, p in formula.occurrences(j, False)] + [("wv", j, 1, False)]
        else:
            side = [("v", i, p) for i, p in formula.occurrences(j, True)] + [("wv", j, 1, True)]
        seq += [("z", j, 1)] + side + [("z", j, 2)]
    nodes = [host.node(lab) for lab in seq]
    if host.kind == "sat-t-spt":
        nodes = _through_subdivisions(host, nodes)
    g = host.graph
    edges = []
    for a, c in zip(nodes, nodes[1:]):
        between = g.edges_between(a, c)
        if not between:
            raise ValueError("host does not match the formula")
        edges.append(min(between))
    return Witness(Kind.PATH_ST, tuple(edges), tuple(nodes))


def _through_subdivisions(host: Gadget, nodes: list[int]) -> list[int]:
    g = host.graph
    out = [nodes[0]]
    for a, c in zip(nodes, nodes[1:]):
        if not g.edges_between(a, c):
            mids = [w for w in g.neighbours(a) if c in g.neighbours(w) and host.labels[w][0] in ("s", "t")]
            if len(mids) != 1:
                raise ValueError("host does not match the formula")
            out.append(mids[0])
        out.append(c)
    return out


# --------------------------------------------------------------------------
# hypergraphs


@dataclass(frozen=True)
class Hypergraph3:
    vertex_count: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        edges = tuple(frozenset(int(v) for v in e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if len(e) != 3 or any(not 0 <= v < self.vertex_count for v in e):
                raise ValueError(f"hyperedge {sorted(e)} is not 3 distinct vertices")
        if len(set(edges)) != len(edges):
            raise ValueError("hyperedges must be distinct")

    def two_colouring(self) -> tuple[bool, ...] | None:
        for colour in product((False, True), repeat=self.vertex_count):
            if all(len({colour[v] for v in e}) == 2 for e in self.edges):
                return colour
        return None


def hypergraph_to_cut_f(h: Hypergraph3) -> Gadget:
    """Per hyperedge, six nodes forming K6 minus a perfect matching, two tied to each vertex."""
    if not h.edges:
        raise ValueError("hypergraph has no hyperedges")
    b = _Builder()
    for v in range(h.vertex_count):
        b.node(("v", v))
    for k, e in enumerate(h.edges):
        six: list[Label] = []
        for v in sorted(e):
            b.edge(("v", v), ("x", k, v))
            b.edge(("v", v), ("y", k, v))
            six += [("x", k, v), ("y", k, v)]
        for a, c in combinations(six, 2):
            if a[2] != c[2]:
                b.edge(a, c)
    return b.build("hyp-cut-f")
