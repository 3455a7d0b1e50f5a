"""Brute-force ground truth: classify every edge subset, then test all pairs.

Deliberately independent of the search engine in ``exact``: nothing here
prunes, and the kind classifiers are written from the definitions.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .graph import MultiGraph
from .witness import Kind, Mode, Problem, Terminals, Verdict, witness_from_edges

MAX_ORACLE_EDGES = 14
MAX_ORACLE_NODES = 16


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        x = parent[x]
    return x


@lru_cache(maxsize=256)
def _subset_table(g: MultiGraph) -> dict[str, object]:
    """Per edge subset: degrees, acyclicity and component count of its support."""
    n, m = g.n, g.m
    acyclic = np.zeros(1 << m, dtype=bool)
    one_comp = np.zeros(1 << m, dtype=bool)  # support forms one component (or is empty)
    spanning = np.zeros(1 << m, dtype=bool)  # (V, S) connected
    maxdeg = np.zeros(1 << m, dtype=np.int8)
    size = np.zeros(1 << m, dtype=np.int8)
    all_even2 = np.zeros(1 << m, dtype=bool)  # every degree is 0 or 2
    degs = np.zeros((1 << m, n), dtype=np.int8)
    support = np.zeros(1 << m, dtype=np.int8)
    for s in range(1 << m):
        parent = list(range(n))
        deg = [0] * n
        cyc = False
        k = 0
        for i in range(m):
            if s >> i & 1:
                k += 1
                u, v = g.edges[i]
                deg[u] += 1
                deg[v] += 1
                ru, rv = _find(parent, u), _find(parent, v)
                if ru == rv:
                    cyc = True
                else:
                    parent[ru] = rv
        touched = [v for v in range(n) if deg[v]]
        roots = {_find(parent, v) for v in touched}
        acyclic[s] = not cyc
        one_comp[s] = len(roots) <= 1
        spanning[s] = len({_find(parent, v) for v in range(n)}) <= 1
        maxdeg[s] = max(deg) if deg else 0
        size[s] = k
        all_even2[s] = all(d in (0, 2) for d in deg)
        degs[s] = deg
        support[s] = len(touched)
    return {
        "acyclic": acyclic,
        "one_comp": one_comp,
        "spanning": spanning,
        "maxdeg": maxdeg,
        "size": size,
        "all_even2": all_even2,
        "degs": degs,
        "support": support,
    }


@lru_cache(maxsize=256)
def _cuts(g: MultiGraph) -> tuple[tuple[int, frozenset[int]], ...]:
    """Every nonempty proper side containing node 0, with its edge set."""
    out = []
    n = g.n
    for bits_side in range(1 << n):
        if not bits_side & 1 or bits_side == (1 << n) - 1:
            continue
        side = frozenset(v for v in range(n) if bits_side >> v & 1)
        mask = 0
        for i, (u, v) in enumerate(g.edges):
            if (u in side) != (v in side):
                mask |= 1 << i
        out.append((mask, side))
    return tuple(out)


def _members(g: MultiGraph, kind: Kind, terminals: Terminals) -> list[tuple[int, frozenset[int] | None]]:
    if kind is Kind.CUT:
        return list(_cuts(g))
    tab = _subset_table(g)
    acyclic = tab["acyclic"]
    if kind is Kind.FOREST:
        sel = acyclic
    elif kind is Kind.TREE:
        sel = acyclic & tab["one_comp"]
    elif kind is Kind.SPANNING_TREE:
        sel = acyclic & tab["spanning"] & (tab["size"] == max(g.n - 1, 0))
    elif kind is Kind.CIRCUIT:
        sel = tab["all_even2"] & tab["one_comp"] & (tab["size"] >= 2)
    else:
        sel = acyclic & tab["one_comp"] & (tab["maxdeg"] <= 2)
        if kind is not Kind.PATH:
            s, t = terminals.pair(kind)
            if s == t:
                sel = np.zeros_like(sel)
                sel[0] = True
            else:
                degs = tab["degs"]
                sel = sel & (degs[:, s] == 1) & (degs[:, t] == 1)
    return [(int(s), None) for s in np.flatnonzero(sel)]


def oracle(g: MultiGraph, prob: Problem, terminals: Terminals = Terminals()) -> Verdict:
    """Materialise all objects of both kinds and test every pair."""
    if g.m > MAX_ORACLE_EDGES or g.n > MAX_ORACLE_NODES:
        raise ValueError(
            f"oracle handles at most {MAX_ORACLE_EDGES} edges and {MAX_ORACLE_NODES} nodes"
        )
    left = _members(g, prob.a, terminals)
    right = _members(g, prob.b, terminals)
    if not left or not right:
        return Verdict("no", None, "oracle")
    a = np.array([x for x, _ in left], dtype=np.int64)
    b = np.array([x for x, _ in right], dtype=np.int64)
    full = g.full_mask
    chunk = max(1, 2_000_000 // len(b))
    for start in range(0, len(a), chunk):
        block = a[start : start + chunk, None]
        if prob.mode is Mode.PACK:
            ok = (block & b[None, :]) == 0
        elif prob.mode is Mode.PART:
            ok = ((block & b[None, :]) == 0) & ((block | b[None, :]) == full)
        else:
            ok = (block | b[None, :]) == full
        hits = np.argwhere(ok)
        if len(hits):
            i, j = hits[0]
            ma, sa = left[start + int(i)]
            mb, sb = right[int(j)]
            wa = witness_from_edges(g, prob.a, ma, terminals, sa)
            wb = witness_from_edges(g, prob.b, mb, terminals, sb)
            return Verdict("yes", (wa, wb), "oracle")
    return Verdict("no", None, "oracle")
