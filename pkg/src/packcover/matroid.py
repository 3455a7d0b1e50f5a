"""Graphic and linear matroids over exact integers.

Linear algebra is fraction-free (Bareiss), so determinants of the power
matrices used in the subset-sum constructions stay exact however large the
entries get.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Iterable, Sequence

from .graph import MultiGraph, component_labels, mask_of
from .reduce import Hypergraph3

# --------------------------------------------------------------------------
# exact elimination


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    k = len(a)
    if any(len(row) != k for row in a):
        raise ValueError("determinant needs a square matrix")
    if k == 0:
        return 1
    sign = 1
    prev = 1
    for i in range(k - 1):
        if a[i][i] == 0:
            swap = next((r for r in range(i + 1, k) if a[r][i] != 0), None)
            if swap is None:
                return 0
            a[i], a[swap] = a[swap], a[i]
            sign = -sign
        for r in range(i + 1, k):
            for c in range(i + 1, k):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
            a[r][i] = 0
        prev = a[i][i]
    return sign * a[k - 1][k - 1]


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix (any shape) by fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    if not a:
        return 0
    rows, cols = len(a), len(a[0])
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r][c] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, rows):
            for cc in range(c + 1, cols):
                a[r][cc] = (a[r][cc] * p - a[r][c] * a[rank][cc]) // prev
            a[r][c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


# --------------------------------------------------------------------------
# matroids


@dataclass(frozen=True)
class LinearMatroid:
    """Column matroid of an integer matrix given by its rows."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise ValueError("a linear matroid needs at least one row and one column")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")

    @classmethod
    def from_rationals(cls, rows: Iterable[Iterable[Fraction | int]]) -> "LinearMatroid":
        """Clear denominators row by row (scaling a row keeps the matroid)."""
        out = []
        for row in rows:
            row = [Fraction(x) for x in row]
            scale = lcm(*(x.denominator for x in row)) if row else 1
            out.append(tuple(int(x * scale) for x in row))
        return cls(tuple(out))

    @property
    def D(self) -> int:
        return len(self.rows)

    @property
    def N(self) -> int:
        return len(self.rows[0])

    @property
    def size(self) -> int:
        return self.N

    def columns(self, subset: Iterable[int]) -> list[list[int]]:
        cols = list(subset)
        return [[row[c] for c in cols] for row in self.rows]

    def rank(self, subset: Iterable[int] | None = None) -> int:
        subset = range(self.N) if subset is None else list(subset)
        if not subset:
            return 0
        return bareiss_rank(self.columns(subset))

    def independent(self, subset: Iterable[int]) -> bool:
        subset = list(subset)
        return self.rank(subset) == len(subset)


@dataclass(frozen=True)
class GraphicMatroid:
    host: MultiGraph

    @property
    def size(self) -> int:
        return self.host.m

    def rank(self, subset: Iterable[int] | None = None) -> int:
        subset = range(self.host.m) if subset is None else list(subset)
        mask = mask_of(subset)
        labels = component_labels(self.host, mask)
        touched = {v for i in subset for v in self.host.edges[i]}
        return len(touched) - len({labels[v] for v in touched})

    def independent(self, subset: Iterable[int]) -> bool:
        subset = list(subset)
        return self.rank(subset) == len(subset)

    def to_linear(self) -> LinearMatroid:
        """Oriented incidence matrix; it represents the graphic matroid over Q."""
        g = self.host
        if g.m == 0 or g.n == 0:
            raise ValueError("empty graph has no matrix representation")
        rows = [[0] * g.m for _ in range(g.n)]
        for i, (u, v) in enumerate(g.edges):
            rows[u][i] = 1
            rows[v][i] = -1
        return LinearMatroid(tuple(tuple(r) for r in rows))


Matroid = LinearMatroid | GraphicMatroid


def rank(mat: Matroid, subset: Iterable[int] | None = None) -> int:
    return mat.rank(subset)


# --------------------------------------------------------------------------
# matroid union (k copies of one matroid)


def union_partition(mat: Matroid, k: int = 2, target: str = "forests") -> list[frozenset[int]] | None:
    """Edmonds' matroid partition by shortest augmenting paths.

    ``forests``: split the whole ground set into k independent sets, or None.
    ``bases``: k disjoint bases, or None if the union rank is below k * rank.
    """
    if target not in ("forests", "bases"):
        raise ValueError("target must be 'forests' or 'bases'")
    parts: list[set[int]] = [set() for _ in range(k)]
    for x in range(mat.size):
        placed = _augment(mat, parts, x)
        if not placed and target == "forests":
            return None
    if target == "bases":
        r = mat.rank()
        if any(len(p) != r for p in parts):
            return None
    return [frozenset(p) for p in parts]


def _augment(mat: Matroid, parts: list[set[int]], x: int) -> bool:
    owner = {y: i for i, p in enumerate(parts) for y in p}
    # parent[y] = (z, i): z takes y's place in part i
    parent: dict[int, tuple[int, int] | None] = {x: None}
    queue = deque([x])
    while queue:
        z = queue.popleft()
        for i, part in enumerate(parts):
            if owner.get(z) == i:
                continue
            if mat.independent(part | {z}):
                cur = z
                parts[i].add(cur)
                while parent[cur] is not None:
                    prev, j = parent[cur]
                    parts[j].discard(cur)
                    parts[j].add(prev)
                    cur = prev
                return True
            for y in sorted(part):
                if y in parent:
                    continue
                if mat.independent((part - {y}) | {z}):
                    parent[y] = (z, i)
                    queue.append(y)
    return False


# --------------------------------------------------------------------------
# circuits, cocircuits, uniformity


def is_uniform(mat: LinearMatroid) -> bool:
    """True iff no set of rank(ground) or fewer columns is dependent."""
    r = mat.rank()
    return find_small_dependent(mat, r) is None


def find_small_dependent(mat: Matroid, size: int) -> tuple[int, ...] | None:
    """Some dependent set with at most ``size`` elements, grown by DFS over independent sets."""

    def rec(chosen: list[int], start: int) -> tuple[int, ...] | None:
        if len(chosen) == size:
            return None
        for c in range(start, mat.size):
            cand = chosen + [c]
            if not mat.independent(cand):
                return tuple(cand)
            found = rec(cand, c + 1)
            if found is not None:
                return found
        return None

    return rec([], 0)


def circuits(mat: Matroid) -> list[frozenset[int]]:
    """All circuits, by increasing size; supersets of found circuits are skipped."""
    found: list[frozenset[int]] = []
    r = mat.rank()
    for k in range(1, min(r + 1, mat.size) + 1):
        for combo in combinations(range(mat.size), k):
            s = frozenset(combo)
            if any(c <= s for c in found):
                continue
            if not mat.independent(combo):
                found.append(s)
    return found


def disjoint_circuits(mat: Matroid) -> tuple[frozenset[int], frozenset[int]] | None:
    cs = circuits(mat)
    for i, a in enumerate(cs):
        for b in cs[i + 1 :]:
            if not a & b:
                return a, b
    return None


def dual(mat: LinearMatroid) -> LinearMatroid:
    """Representation of the dual matroid from the reduced row echelon form.

    With pivot columns P and reduced rows R, each non-pivot column j gives
    the dual row e_j - sum_i R[i][j] e_{P[i]}.
    """
    a = [[Fraction(x) for x in row] for row in mat.rows]
    rows, cols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    if not free:
        return LinearMatroid(((0,) * cols,))
    out = []
    for j in free:
        row = [Fraction(0)] * cols
        row[j] = Fraction(1)
        for i, pc in enumerate(pivots):
            row[pc] = -a[i][j]
        out.append(row)
    return LinearMatroid.from_rationals(out)


def disjoint_cocircuits(mat: Matroid) -> tuple[frozenset[int], frozenset[int]] | None:
    if mat.size == 0:
        return None
    lin = mat.to_linear() if isinstance(mat, GraphicMatroid) else mat
    return disjoint_circuits(dual(lin))


# --------------------------------------------------------------------------
# subset sum and its matrices


@dataclass(frozen=True)
class SubsetSumInstance:
    a: tuple[int, ...]
    b: int
    d: int

    def __post_init__(self) -> None:
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if not a or any(x <= 0 for x in a) or any(x >= y for x, y in zip(a, a[1:])):
            raise ValueError("a must be strictly increasing positive integers")
        if self.b <= 0 or not 1 <= self.d <= len(a):
            raise ValueError("need b > 0 and 1 <= d <= n")

    def solution(self) -> tuple[int, ...] | None:
        """Indices of d values summing to b, by exhaustive search."""
        for combo in combinations(range(len(self.a)), self.d):
            if sum(self.a[i] for i in combo) == self.b:
                return combo
        return None


def khachyan_matrix(inst: SubsetSumInstance) -> LinearMatroid:
    """Rows 1, a, ..., a^d over the values, plus the column (0, ..., 0, 1, b)."""
    d = inst.d
    rows = []
    for k in range(d + 1):
        row = [x**k for x in inst.a]
        last = inst.b if k == d else (1 if k == d - 1 else 0)
        rows.append(tuple(row + [last]))
    return LinearMatroid(tuple(rows))


def selection_determinant(inst: SubsetSumInstance, chosen: Sequence[int]) -> int:
    """Closed form for the determinant of d chosen value columns plus the last column."""
    prod = 1
    for i, j in combinations(sorted(chosen), 2):
        prod *= inst.a[j] - inst.a[i]
    return (inst.b - sum(inst.a[i] for i in chosen)) * prod


def has_dependent_columns(mat: LinearMatroid, count: int) -> tuple[int, ...] | None:
    """Some ``count`` columns with zero determinant (needs count == D)."""
    if count != mat.D:
        raise ValueError("square selections only")
    for combo in combinations(range(mat.N), count):
        if bareiss_det(mat.columns(combo)) == 0:
            return combo
    return None


def vandermonde_and_alternant(x: Sequence[int]) -> tuple[int, int]:
    """Determinants of the Vandermonde matrix and of its alternant (top power k instead of k-1)."""
    x = [int(v) for v in x]
    if len(set(x)) != len(x):
        raise ValueError("values must be distinct")
    k = len(x)
    vander = [[v**p for v in x] for p in range(k)]
    alt = [[v**p for v in x] for p in list(range(k - 1)) + [k]]
    return bareiss_det(vander), bareiss_det(alt)


def vandermonde_closed_form(x: Sequence[int]) -> tuple[int, int]:
    prod = 1
    for i, j in combinations(range(len(x)), 2):
        prod *= x[j] - x[i]
    return prod, sum(x) * prod


# --------------------------------------------------------------------------
# exact cover by 3-sets


def x3c_to_subset_sum(h: Hypergraph3) -> SubsetSumInstance:
    """Hyperedges as base-2 characteristic numbers; target covers every vertex once."""
    if h.vertex_count % 3 or h.vertex_count == 0:
        raise ValueError("vertex count must be a positive multiple of 3")
    a = sorted(sum(1 << v for v in e) for e in h.edges)
    return SubsetSumInstance(tuple(a), (1 << h.vertex_count) - 1, h.vertex_count // 3)


def exact_cover(h: Hypergraph3) -> tuple[frozenset[int], ...] | None:
    """Disjoint hyperedges covering every vertex, by exhaustive search."""
    if h.vertex_count % 3:
        return None
    d = h.vertex_count // 3
    full = (1 << h.vertex_count) - 1
    masks = [sum(1 << v for v in e) for e in h.edges]
    for combo in combinations(range(len(masks)), d):
        acc = 0
        for i in combo:
            if acc & masks[i]:
                break
            acc |= masks[i]
        else:
            if acc == full:
                return tuple(h.edges[i] for i in combo)
    return None


def pad_to_2d_plus_2(h: Hypergraph3) -> Hypergraph3:
    """Pad to exactly 2d + 2 hyperedges while keeping exact-coverability.

    Too many edges: add k = |E| - (2d + 2) fresh triples {u_i, v_i, w_i},
    each of which any exact cover must use.  Too few: add k fresh triples,
    with k the least value leaving room for enough further triples over the
    new vertices, then take those extra triples in lexicographic order.
    """
    if h.vertex_count % 3:
        raise ValueError("vertex count must be a multiple of 3")
    d = h.vertex_count // 3
    count = len(h.edges)
    if count == 2 * d + 2:
        return h
    if count > 2 * d + 2:
        k = count - (2 * d + 2)
    else:
        k = 1
        while comb(3 * k, 3) - 2 * k < 2 * d + 2 - count:
            k += 1
    base = h.vertex_count
    fresh = [frozenset({base + 3 * i, base + 3 * i + 1, base + 3 * i + 2}) for i in range(k)]
    edges = list(h.edges) + fresh
    target = 2 * (d + k) + 2
    if len(edges) < target:
        taken = set(fresh)
        for triple in combinations(range(base, base + 3 * k), 3):
            if len(edges) == target:
                break
            t = frozenset(triple)
            if t not in taken:
                edges.append(t)
                taken.add(t)
    return Hypergraph3(base + 3 * k, tuple(edges))
