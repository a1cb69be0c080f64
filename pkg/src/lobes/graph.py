"""Immutable finite simple graphs over dense 0-based vertex ids.

The text format used by :func:`parse_graph` / :func:`serialize_graph` is
documented in docs/formats.md and is bit-exact: serializing a parsed graph
always yields the canonical form (header line, then edges sorted as pairs).
"""

from __future__ import annotations


class GraphError(ValueError):
    """Malformed graph construction or text input."""


class Graph:
    """A finite simple undirected graph on vertices 0..vertex_count-1.

    Instances are immutable after construction and safe to share between
    threads.  ``edges`` is a sorted tuple of ``(u, v)`` pairs with ``u < v``;
    ``adjacency[v]`` is the sorted tuple of neighbors of ``v``.  Use
    :func:`make_graph` to build one with validation.
    """

    __slots__ = ("vertex_count", "edges", "adjacency", "_edge_set")

    def __init__(self, vertex_count: int, edges: tuple[tuple[int, int], ...],
                 adjacency: tuple[tuple[int, ...], ...]):
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "adjacency", adjacency)
        object.__setattr__(self, "_edge_set", frozenset(edges))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._edge_set if u < v else (v, u) in self._edge_set

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and self.vertex_count == other.vertex_count
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


def make_graph(vertex_count: int, edges) -> Graph:
    """Build a :class:`Graph`, normalizing and deduplicating ``edges``.

    The result is independent of the input edge order.  Raises
    :class:`GraphError` for self-loops or out-of-range endpoints.
    """
    if vertex_count < 0:
        raise GraphError(f"vertex_count must be nonnegative, got {vertex_count}")
    normalized = set()
    for pair in edges:
        u, v = pair
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(
                f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u} is not allowed")
        normalized.add((u, v) if u < v else (v, u))
    sorted_edges = tuple(sorted(normalized))
    nbrs: list[list[int]] = [[] for _ in range(vertex_count)]
    for u, v in sorted_edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adjacency = tuple(tuple(sorted(a)) for a in nbrs)
    return Graph(vertex_count, sorted_edges, adjacency)


def relabel_graph(g: Graph, perm) -> Graph:
    """Return the graph with vertex v renamed to perm[v]."""
    return make_graph(g.vertex_count, [(perm[u], perm[v]) for u, v in g.edges])


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``vertices`` with dense relabeling.

    Returns ``(sub, originals)`` where ``originals[i]`` is the original id of
    the subgraph vertex ``i`` (originals are sorted ascending).
    """
    originals = tuple(sorted(set(vertices)))
    local = {v: i for i, v in enumerate(originals)}
    edges = [(local[u], local[v]) for u, v in g.edges
             if u in local and v in local]
    return make_graph(len(originals), edges), originals


def is_connected(g: Graph) -> bool:
    """True for graphs where every vertex is reachable from vertex 0.

    The empty graph counts as connected.
    """
    n = g.vertex_count
    if n <= 1:
        return True
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """The bipartition classes of a connected bipartite graph, else None.

    The class containing the smallest vertex id comes first.
    """
    n = g.vertex_count
    color = [-1] * n
    for start in range(n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.adjacency[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = tuple(v for v in range(n) if color[v] == 0)
    side1 = tuple(v for v in range(n) if color[v] == 1)
    return side0, side1


def parse_graph(text: str) -> Graph:
    """Parse the graph text format (see docs/formats.md).

    Raises :class:`GraphError` with a line number on syntax errors and on
    header/edge-count mismatches.
    """
    header = None
    edges: list[tuple[int, int]] = []
    n = m = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {raw!r}")
        if header is None:
            header = (a, b)
            n, m = a, b
            if n < 0 or m < 0:
                raise GraphError(f"line {lineno}: negative header values")
            continue
        if len(edges) >= m:
            raise GraphError(f"line {lineno}: more edge lines than the header's {m}")
        if not (0 <= a < b < n):
            raise GraphError(
                f"line {lineno}: edge must satisfy 0 <= u < v < {n}, got {a} {b}")
        edges.append((a, b))
    if header is None:
        raise GraphError("empty input: missing 'n m' header line")
    if len(edges) != m:
        raise GraphError(f"header declares {m} edges but {len(edges)} were given")
    g = make_graph(n, edges)
    if g.edge_count != m:
        raise GraphError("duplicate edge lines in input")
    return g


def serialize_graph(g: Graph) -> str:
    """Canonical text form: header, then edge lines sorted as (u, v) pairs."""
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
