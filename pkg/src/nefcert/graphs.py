"""Simple graphs, edge configurations, and the odd-cycle condition."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .configurations import Configuration, as_configuration
from .exceptions import BadParams, CycleBudgetExceeded, NoEdges, NotConnected
from .linalg import IntMatrix

DEFAULT_CYCLE_CAP = 10000


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..d with a sorted edge list."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if not (1 <= u < v <= self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range or not normalized")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
        if list(self.edges) != sorted(self.edges):
            raise ValueError("edges must be sorted")

    @staticmethod
    def from_edges(vertex_count: int, edges) -> "Graph":
        norm = sorted({(min(u, v), max(u, v)) for u, v in edges})
        if any(u == v for u, v in norm):
            raise ValueError("loops are not allowed")
        return Graph(vertex_count, tuple(norm))

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.vertex_count + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def is_connected(G: Graph) -> bool:
    if G.vertex_count == 0:
        return True
    adj = G.adjacency()
    seen = {1}
    stack = [1]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == G.vertex_count


def is_bipartite(G: Graph) -> bool:
    adj = G.adjacency()
    color = {}
    for start in range(1, G.vertex_count + 1):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def two_coloring(G: Graph) -> dict[int, int] | None:
    adj = G.adjacency()
    color = {}
    for start in range(1, G.vertex_count + 1):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop(0)
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def edge_configuration(G: Graph) -> Configuration:
    """Columns e_i + e_j over the edges, witness (1/2, ..., 1/2)."""
    if not G.edges:
        raise NoEdges("edge configuration needs at least one edge")
    d = G.vertex_count
    cols = []
    for u, v in G.edges:
        col = [0] * d
        col[u - 1] = 1
        col[v - 1] = 1
        cols.append(tuple(col))
    matrix = IntMatrix.from_columns(cols)
    witness = tuple(Fraction(1, 2) for _ in range(d))
    return Configuration(matrix, witness)


def reduced_edge_configuration(G: Graph) -> tuple[Configuration, int | None]:
    """Edge configuration with one redundant row deleted when the graph is
    bipartite; the deleted row is the last vertex (the highest-numbered
    vertex of its color class).  Returns (configuration, deleted_vertex)."""
    if not G.edges:
        raise NoEdges("edge configuration needs at least one edge")
    if not is_bipartite(G):
        return edge_configuration(G), None
    d = G.vertex_count
    full = edge_configuration(G).matrix
    rows = [full.row(i) for i in range(d - 1)]
    return as_configuration(IntMatrix.from_rows(rows)), d


def _odd_cycles(G: Graph, cap: int) -> list[frozenset[int]]:
    """Vertex sets of all simple odd cycles, found by rooted DFS with the
    root as the least vertex and an orientation tie-break."""
    adj = G.adjacency()
    cycles = []
    count = 0
    for root in range(1, G.vertex_count + 1):
        stack = [(root, [root], {root})]
        while stack:
            u, path, onpath = stack.pop()
            for w in sorted(adj[u]):
                if w == root and len(path) >= 3 and path[1] < path[-1]:
                    count += 1
                    if count > cap:
                        raise CycleBudgetExceeded(
                            f"more than {cap} simple cycles; raise NEFCERT_CYCLE_CAP")
                    if len(path) % 2 == 1:
                        cycles.append(frozenset(path))
                elif w > root and w not in onpath:
                    stack.append((w, path + [w], onpath | {w}))
    return cycles


def odd_cycles_pairwise_intersect(G: Graph, cap: int | None = None) -> bool:
    """True iff no two vertex-disjoint odd cycles exist.  Bipartite graphs
    are vacuously true.  Enumeration stops at the configured budget."""
    if cap is None:
        cap = int(os.environ.get("NEFCERT_CYCLE_CAP", DEFAULT_CYCLE_CAP))
    if is_bipartite(G):
        return True
    odd = _odd_cycles(G, cap)
    for i in range(len(odd)):
        for j in range(i + 1, len(odd)):
            if not (odd[i] & odd[j]):
                return False
    return True


def edge_polytope_dim(G: Graph) -> int:
    """d-2 when bipartite, d-1 otherwise; requires a connected graph."""
    if not is_connected(G):
        raise NotConnected("the dimension formula needs a connected graph")
    return G.vertex_count - 2 if is_bipartite(G) else G.vertex_count - 1


def family(kind: str, params: tuple = ()) -> Graph:
    """Named instance families used throughout the test corpus."""
    if kind == "cycle":
        if len(params) != 1 or params[0] < 3:
            raise BadParams("cycle needs one parameter n >= 3")
        n = params[0]
        return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])
    if kind == "path":
        if len(params) != 1 or params[0] < 2:
            raise BadParams("path needs one parameter n >= 2 (vertex count)")
        n = params[0]
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])
    if kind == "complete_bipartite":
        if len(params) != 2 or min(params) < 1:
            raise BadParams("complete_bipartite needs parameters a, b >= 1")
        a, b = params
        return Graph.from_edges(a + b, [(i, a + j) for i in range(1, a + 1)
                                        for j in range(1, b + 1)])
    if kind == "bowtie":
        if params:
            raise BadParams("bowtie takes no parameters")
        return Graph.from_edges(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
    if kind == "bridged_triangles":
        if params:
            raise BadParams("bridged_triangles takes no parameters")
        return Graph.from_edges(6, [(1, 2), (1, 3), (2, 3), (3, 4),
                                    (4, 5), (4, 6), (5, 6)])
    raise BadParams(f"unknown family {kind!r}")


def parse_graph(text: str) -> Graph:
    """First line "d m", then m lines "u v" with 1-indexed vertices."""
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("graph text needs a 'd m' header")
    d, m = int(tokens[0]), int(tokens[1])
    body = tokens[2:]
    if len(body) != 2 * m:
        raise ValueError(f"expected {2 * m} endpoint entries, found {len(body)}")
    edges = [(int(body[2 * i]), int(body[2 * i + 1])) for i in range(m)]
    return Graph.from_edges(d, edges)


def render_graph(G: Graph) -> str:
    lines = [f"{G.vertex_count} {len(G.edges)}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def parse_family_spec(spec: str) -> Graph:
    """Parse "cycle:4" / "complete_bipartite:2,3" / "bowtie" shorthands."""
    if ":" in spec:
        kind, _, raw = spec.partition(":")
        try:
            params = tuple(int(x) for x in raw.split(",") if x != "")
        except ValueError as exc:
            raise BadParams(f"bad family parameters {raw!r}") from exc
    else:
        kind, params = spec, ()
    return family(kind, params)
