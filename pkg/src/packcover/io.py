"""Text formats for graphs, matrices, hypergraphs and formulas, plus named instances."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import MultiGraph, is_connected
from .matroid import LinearMatroid
from .reduce import Cnf3, Hypergraph3


def _content_lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def _ints(tokens: list[str], what: str) -> list[int]:
    try:
        return [int(tok) for tok in tokens]
    except ValueError:
        raise ValueError(f"{what}: expected integers, got {' '.join(tokens)!r}") from None


def parse_graph(text: str) -> MultiGraph:
    """Header ``n m`` then ``m`` lines ``u v`` (0-based); edges keep file order."""
    lines = _content_lines(text)
    if not lines:
        raise ValueError("graph: empty input")
    header = _ints(lines[0], "graph header")
    if len(header) != 2:
        raise ValueError("graph: header must be 'n m'")
    n, m = header
    if len(lines) - 1 != m:
        raise ValueError(f"graph: header promises {m} edges, found {len(lines) - 1}")
    edges = []
    for k, toks in enumerate(lines[1:]):
        pair = _ints(toks, f"edge {k}")
        if len(pair) != 2:
            raise ValueError(f"graph: edge {k} must be 'u v'")
        edges.append((pair[0], pair[1]))
    return MultiGraph(n, tuple(edges))


def emit_graph(g: MultiGraph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> LinearMatroid:
    """Header ``D N`` then ``D`` rows of ``N`` integers."""
    lines = _content_lines(text)
    if not lines:
        raise ValueError("matrix: empty input")
    header = _ints(lines[0], "matrix header")
    if len(header) != 2:
        raise ValueError("matrix: header must be 'D N'")
    rows, cols = header
    if len(lines) - 1 != rows:
        raise ValueError(f"matrix: header promises {rows} rows, found {len(lines) - 1}")
    out = []
    for k, toks in enumerate(lines[1:]):
        row = _ints(toks, f"row {k}")
        if len(row) != cols:
            raise ValueError(f"matrix: row {k} has {len(row)} entries, expected {cols}")
        out.append(tuple(row))
    return LinearMatroid(tuple(out))


def emit_matrix(mat: LinearMatroid) -> str:
    lines = [f"{mat.D} {mat.N}"] + [" ".join(str(x) for x in row) for row in mat.rows]
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph3:
    """Header ``n`` then one line of three vertices per hyperedge."""
    lines = _content_lines(text)
    if not lines:
        raise ValueError("hypergraph: empty input")
    header = _ints(lines[0], "hypergraph header")
    if len(header) != 1:
        raise ValueError("hypergraph: header must be the vertex count")
    edges = []
    for k, toks in enumerate(lines[1:]):
        triple = _ints(toks, f"hyperedge {k}")
        if len(triple) != 3:
            raise ValueError(f"hypergraph: hyperedge {k} needs three vertices")
        edges.append(frozenset(triple))
    return Hypergraph3(header[0], tuple(edges))


def emit_hypergraph(h: Hypergraph3) -> str:
    lines = [str(h.vertex_count)] + [" ".join(str(v) for v in sorted(e)) for e in h.edges]
    return "\n".join(lines) + "\n"


def parse_cnf(text: str) -> Cnf3:
    """DIMACS-like: optional ``p cnf V C`` line, ``c`` comments, clauses of 1-based literals ending in 0."""
    variables = None
    literals: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("#"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError("cnf: problem line must be 'p cnf V C'")
            variables = int(parts[2])
            continue
        literals.extend(_ints(line.split(), "cnf clause"))
    clauses = []
    current: list[int] = []
    for lit in literals:
        if lit == 0:
            clauses.append(current)
            current = []
        else:
            current.append(lit)
    if current:
        clauses.append(current)
    seen = max((abs(x) for c in clauses for x in c), default=0)
    if variables is None:
        variables = seen
    elif seen > variables:
        raise ValueError(f"cnf: literal {seen} exceeds the declared {variables} variables")
    return Cnf3(variables, tuple(tuple((abs(x) - 1, x > 0) for x in c) for c in clauses))


def emit_cnf(phi: Cnf3) -> str:
    lines = [f"p cnf {phi.variable_count} {len(phi.clauses)}"]
    for c in phi.clauses:
        lines.append(" ".join(str(v + 1 if p else -(v + 1)) for v, p in c) + " 0")
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# named instances


def _positive(text: str, what: str, least: int) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ValueError(f"{what} must be an integer, got {text!r}") from None
    if value < least:
        raise ValueError(f"{what} must be at least {least}")
    return value


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple(combinations(range(n), 2)))


def cycle_graph(n: int) -> MultiGraph:
    if n == 2:
        return MultiGraph(2, ((0, 1), (0, 1)))
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def petersen_graph() -> MultiGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return MultiGraph(10, tuple(outer + spokes + inner))


def prism_graph() -> MultiGraph:
    return MultiGraph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)))


def k33_graph() -> MultiGraph:
    return MultiGraph(6, tuple((i, j) for i in range(3) for j in range(3, 6)))


def theta_graph() -> MultiGraph:
    """Two nodes joined by three internally disjoint paths of length 2."""
    return MultiGraph(5, ((0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1)))


def grid_graph(a: int, b: int) -> MultiGraph:
    edges = []
    for r in range(a):
        for c in range(b):
            v = r * b + c
            if c + 1 < b:
                edges.append((v, v + 1))
            if r + 1 < a:
                edges.append((v, v + b))
    return MultiGraph(a * b, tuple(edges))


def random_connected(n: int, m: int, seed: int) -> MultiGraph:
    """Random spanning tree plus ``m - n + 1`` uniformly chosen extra edges (parallels allowed)."""
    if n < 1 or m < n - 1 or (n == 1 and m > 0):
        raise ValueError("need n >= 1 and n - 1 <= m, with no edges on one node")
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    while len(edges) < m:
        u, v = rng.sample(range(n), 2)
        edges.append((min(u, v), max(u, v)))
    rng.shuffle(edges)
    return MultiGraph(n, tuple(edges))


FAMILIES = ("k4", "k33", "prism", "petersen", "cycle:n", "path:n", "theta", "grid:a,b", "random:n,m,seed")


def generate(family: str) -> MultiGraph:
    """Build a named instance such as ``k4``, ``cycle:5`` or ``random:6,8,1``."""
    name, _, arg = family.partition(":")
    params = arg.split(",") if arg else []
    fixed = {
        "k4": lambda: complete_graph(4),
        "k33": k33_graph,
        "prism": prism_graph,
        "petersen": petersen_graph,
        "theta": theta_graph,
    }
    if name in fixed:
        if params:
            raise ValueError(f"family {name} takes no parameters")
        return fixed[name]()
    if name in ("cycle", "path"):
        if len(params) != 1:
            raise ValueError(f"family {name} needs one parameter, e.g. {name}:5")
        if name == "cycle":
            return cycle_graph(_positive(params[0], "cycle length", 2))
        return path_graph(_positive(params[0], "path node count", 1))
    if name == "grid":
        if len(params) != 2:
            raise ValueError("family grid needs two parameters, e.g. grid:3,4")
        return grid_graph(_positive(params[0], "grid rows", 1), _positive(params[1], "grid columns", 1))
    if name == "random":
        if len(params) != 3:
            raise ValueError("family random needs n,m,seed, e.g. random:6,8,1")
        n = _positive(params[0], "node count", 1)
        m = _positive(params[1], "edge count", 0)
        seed = _positive(params[2], "seed", 0)
        g = random_connected(n, m, seed)
        assert is_connected(g)
        return g
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
