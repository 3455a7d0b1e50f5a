"""Object kinds, the 44-problem catalogue, and witness verification.

Every solver answer is judged here: a ``yes`` verdict is only accepted
when both witnesses verify and satisfy the packing, partitioning or
covering relation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graph import (
    MultiGraph,
    bits,
    component_labels,
    is_acyclic,
    mask_of,
    node_support,
    popcount,
)


class Kind(str, Enum):
    PATH = "P"
    PATH_ST = "Pst"
    PATH_ST2 = "Pst2"
    CIRCUIT = "C"
    FOREST = "F"
    TREE = "T"
    SPANNING_TREE = "SpT"
    CUT = "Cut"

    def __str__(self) -> str:
        return self.value

    @property
    def is_path(self) -> bool:
        return self in (Kind.PATH, Kind.PATH_ST, Kind.PATH_ST2)

    @property
    def walk_aux(self) -> bool:
        return self.is_path or self is Kind.CIRCUIT


class Mode(str, Enum):
    PACK = "pack"
    PART = "part"
    COVER = "cover"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Terminals:
    s: int | None = None
    t: int | None = None
    s2: int | None = None
    t2: int | None = None

    def pair(self, kind: Kind) -> tuple[int, int]:
        if kind is Kind.PATH_ST:
            pair = (self.s, self.t)
        elif kind is Kind.PATH_ST2:
            pair = (self.s2, self.t2)
        else:
            raise ValueError(f"{kind} has no terminals")
        if pair[0] is None or pair[1] is None:
            raise ValueError(f"terminals for {kind} are missing")
        return pair  # type: ignore[return-value]


@dataclass(frozen=True)
class Problem:
    mode: Mode
    a: Kind
    b: Kind

    @property
    def name(self) -> str:
        return f"{self.mode.value}:{self.a.value},{self.b.value}"

    def __str__(self) -> str:
        return self.name

    @property
    def kinds(self) -> tuple[Kind, Kind]:
        return (self.a, self.b)

    @property
    def needs_st(self) -> bool:
        return Kind.PATH_ST in self.kinds

    @property
    def needs_st2(self) -> bool:
        return Kind.PATH_ST2 in self.kinds


# Table spellings: 25 partitioning, 9 packing, 10 covering problems.
_PART = [
    "P,P", "P,Pst", "P,C", "P,T", "P,SpT", "P,F",
    "Pst,Pst2", "Pst,C", "Pst,T", "Pst,SpT", "Pst,F",
    "C,C", "C,T", "C,SpT", "C,F",
    "T,T", "T,SpT",
    "F,F", "SpT,SpT",
    "Cut,Cut", "Cut,F", "Cut,C", "Cut,T", "Cut,P", "Cut,Pst",
]
_PACK = ["Pst,Pst2", "Pst,C", "Pst,SpT", "C,C", "C,SpT", "SpT,SpT", "Cut,Cut", "Cut,Pst", "Cut,C"]
_COVER = ["P,P", "P,Pst", "P,C", "Pst,Pst2", "Pst,C", "C,C", "Cut,Cut", "Cut,C", "Cut,P", "Cut,Pst"]

CATALOGUE_NAMES: tuple[str, ...] = tuple(
    [f"part:{p}" for p in _PART] + [f"pack:{p}" for p in _PACK] + [f"cover:{p}" for p in _COVER]
)


def _parse(name: str) -> Problem:
    try:
        mode_s, pair = name.strip().split(":")
        a_s, b_s = pair.split(",")
        return Problem(Mode(mode_s.strip()), Kind(a_s.strip()), Kind(b_s.strip()))
    except ValueError as exc:
        raise ValueError(f"malformed problem name {name!r}") from exc


_BY_NAME = {name: _parse(name) for name in CATALOGUE_NAMES}


def catalogue() -> list[Problem]:
    return [_BY_NAME[name] for name in CATALOGUE_NAMES]


def problem(name: str) -> Problem:
    """Look up a catalogue entry; the reversed pair spelling is accepted too."""
    p = _parse(name)
    if p.name in _BY_NAME:
        return _BY_NAME[p.name]
    swapped = Problem(p.mode, p.b, p.a)
    if swapped.name in _BY_NAME:
        return _BY_NAME[swapped.name]
    raise ValueError(f"{name!r} is not one of the 44 catalogue problems")


# --------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class Witness:
    """Certificate for one object.

    ``edges`` is in walk order for paths and circuits and sorted otherwise.
    ``nodes`` is the node sequence of a path, or the cyclic node sequence of
    a circuit (without repeating the start). ``side`` is the cut side.
    """

    kind: Kind
    edges: tuple[int, ...]
    nodes: tuple[int, ...] | None = None
    side: frozenset[int] | None = None

    @property
    def mask(self) -> int:
        return mask_of(self.edges)

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value, "edges": list(self.edges)}
        if self.nodes is not None:
            out["nodes"] = list(self.nodes)
        if self.side is not None:
            out["side"] = sorted(self.side)
        return out


@dataclass(frozen=True)
class Verdict:
    answer: str  # "yes" | "no" | "budget_exceeded"
    witnesses: tuple[Witness, Witness] | None = None
    method: str = "exact"
    note: str = field(default="", compare=False)

    @property
    def yes(self) -> bool:
        return self.answer == "yes"

    def to_json(self) -> dict:
        return {
            "answer": self.answer,
            "method": self.method,
            "witnesses": None if self.witnesses is None else [w.to_json() for w in self.witnesses],
        }


def _degrees(g: MultiGraph, mask: int) -> dict[int, int]:
    deg: dict[int, int] = {}
    for i in bits(mask):
        u, v = g.edges[i]
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return deg


def _check_walk(g: MultiGraph, nodes: tuple[int, ...], edges: tuple[int, ...], closed: bool) -> bool:
    if len(set(nodes)) != len(nodes) or len(set(edges)) != len(edges):
        return False
    if any(not 0 <= e < g.m for e in edges) or any(not 0 <= v < g.n for v in nodes):
        return False
    k = len(edges)
    for i, e in enumerate(edges):
        a = nodes[i]
        b = nodes[(i + 1) % len(nodes)] if closed else nodes[i + 1]
        if set(g.edges[e]) != {a, b}:
            return False
    return k == (len(nodes) if closed else len(nodes) - 1)


def verify_witness(g: MultiGraph, w: Witness, terminals: Terminals = Terminals()) -> bool:
    if any(not 0 <= e < g.m for e in w.edges) or len(set(w.edges)) != len(w.edges):
        return False
    mask = w.mask
    kind = w.kind
    if kind.walk_aux:
        if w.nodes is None or w.side is not None:
            raise ValueError(f"{kind} witness needs a node sequence")
        if kind is Kind.CIRCUIT:
            return len(w.edges) >= 2 and _check_walk(g, w.nodes, w.edges, closed=True)
        if not w.nodes or not _check_walk(g, w.nodes, w.edges, closed=False):
            return False
        if kind is Kind.PATH:
            return True
        s, t = terminals.pair(kind)
        return {w.nodes[0], w.nodes[-1]} == {s, t} if s != t else w.nodes == (s,)
    if kind is Kind.CUT:
        if w.side is None or w.nodes is not None:
            raise ValueError("cut witness needs a side")
        side = w.side
        if not side or len(side) >= g.n or any(not 0 <= v < g.n for v in side):
            return False
        return g.delta(side) == mask
    if w.nodes is not None or w.side is not None:
        raise ValueError(f"{kind} witness takes no auxiliary data")
    if not is_acyclic(g, mask):
        return False
    if kind is Kind.FOREST:
        return True
    support = node_support(g, mask)
    if kind is Kind.TREE:
        return mask == 0 or popcount(mask) == len(support) - 1
    # spanning tree
    return popcount(mask) == g.n - 1 and (g.n <= 1 or len(support) == g.n)


def verify_verdict(g: MultiGraph, prob: Problem, v: Verdict, terminals: Terminals = Terminals()) -> bool:
    """Check a ``yes`` verdict: both witnesses valid and in the mode relation."""
    if v.answer != "yes" or v.witnesses is None:
        return False
    wa, wb = v.witnesses
    if (wa.kind, wb.kind) not in ((prob.a, prob.b), (prob.b, prob.a)):
        return False
    try:
        if not (verify_witness(g, wa, terminals) and verify_witness(g, wb, terminals)):
            return False
    except ValueError:
        return False
    ma, mb = wa.mask, wb.mask
    if prob.mode is Mode.PACK:
        return ma & mb == 0
    if prob.mode is Mode.PART:
        return ma & mb == 0 and ma | mb == g.full_mask
    return ma | mb == g.full_mask


# --------------------------------------------------------------------------
# building witnesses from edge sets


def walk_from_edges(g: MultiGraph, mask: int, start: int | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Order a path or circuit edge set as a walk; returns (nodes, edges)."""
    deg = _degrees(g, mask)
    if not deg:
        raise ValueError("empty edge set has no walk")
    ends = sorted(v for v, d in deg.items() if d == 1)
    closed = not ends
    if start is None:
        start = ends[0] if ends else min(deg)
    nodes = [start]
    edges: list[int] = []
    remaining = mask
    cur = start
    while remaining:
        step = None
        for w, e in sorted(g.incidence[cur], key=lambda x: x[1]):
            if remaining >> e & 1:
                step = (w, e)
                break
        if step is None:
            raise ValueError("edge set is not a single walk")
        w, e = step
        remaining &= ~(1 << e)
        edges.append(e)
        cur = w
        nodes.append(w)
    if closed:
        if nodes[-1] != nodes[0]:
            raise ValueError("edge set is not a closed walk")
        nodes.pop()
    return tuple(nodes), tuple(edges)


def cut_side(g: MultiGraph, mask: int) -> frozenset[int] | None:
    """A nonempty proper X with delta(X) == mask, or None if mask is not a cut."""
    labels = component_labels(g, g.full_mask & ~mask)
    comps = sorted(set(labels))
    index = {c: i for i, c in enumerate(comps)}
    colour = [-1] * len(comps)
    adj: list[list[int]] = [[] for _ in comps]
    for i in bits(mask):
        u, v = g.edges[i]
        cu, cv = index[labels[u]], index[labels[v]]
        if cu == cv:
            return None
        adj[cu].append(cv)
        adj[cv].append(cu)
    for root in range(len(comps)):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if colour[y] < 0:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return None
    if len(comps) < 2:
        return None
    if all(c == 0 for c in colour):
        # mask is empty and the graph is disconnected: take one component
        colour[-1] = 1
    side = frozenset(v for v in range(g.n) if colour[index[labels[v]]] == 0)
    return side


def witness_from_edges(
    g: MultiGraph, kind: Kind, mask: int, terminals: Terminals = Terminals(), side: frozenset[int] | None = None
) -> Witness:
    if kind.is_path:
        if mask == 0:
            if kind is Kind.PATH:
                return Witness(kind, (), (0,))
            s, _ = terminals.pair(kind)
            return Witness(kind, (), (s,))
        start = None
        if kind is not Kind.PATH:
            start = terminals.pair(kind)[0]
        nodes, edges = walk_from_edges(g, mask, start)
        return Witness(kind, edges, nodes)
    if kind is Kind.CIRCUIT:
        nodes, edges = walk_from_edges(g, mask)
        return Witness(kind, edges, nodes)
    if kind is Kind.CUT:
        if side is None:
            side = cut_side(g, mask)
            if side is None:
                raise ValueError("edge set is not a cut")
        return Witness(kind, tuple(bits(mask)), None, frozenset(side))
    return Witness(kind, tuple(bits(mask)))
