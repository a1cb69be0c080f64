"""Catalog of named graphs used throughout the test corpus and CLI.

Constructions are fixed here (and documented in docs/formats.md) so that
serialized output is reproducible; their symmetry properties are pinned by
the test suite rather than by adjacency literals.
"""

from __future__ import annotations

import itertools

from .graph import Graph, GraphError, make_graph


def _k4() -> Graph:
    return complete_graph(4)


def complete_graph(n: int) -> Graph:
    return make_graph(n, list(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    """Path on n vertices (n >= 1)."""
    if n < 1:
        raise GraphError(f"path needs at least 1 vertex, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star K_{1,n}: center 0 joined to n leaves."""
    if n < 1:
        raise GraphError(f"star needs at least 1 leaf, got {n}")
    return make_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def complete_bipartite_graph(s: int, t: int) -> Graph:
    """K_{s,t} with sides 0..s-1 and s..s+t-1."""
    if s < 1 or t < 1:
        raise GraphError(f"complete_bipartite needs positive sides, got {s}, {t}")
    return make_graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])


def chorded_5_cycle() -> Graph:
    """The 5-cycle 0-1-2-3-4 with the extra chord {0, 2}.

    Degrees: vertices 0 and 2 have valence 3, the rest valence 2.
    """
    return make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])


def petersen_graph() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5).

    3-regular on 10 vertices.
    """
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, 5 + i))
    return make_graph(10, edges)


def folkman_graph() -> Graph:
    """The 20-vertex, 4-regular semisymmetric graph.

    Incidence construction: one side holds two copies of each vertex of K5
    (ids 2w and 2w+1 for w in 0..4), the other side holds the ten edges of K5
    (ids 10..19 in lexicographic edge order); a copy is joined to every K5
    edge its vertex lies on.
    """
    k5_edges = list(itertools.combinations(range(5), 2))
    edges = []
    for e_ix, (u, v) in enumerate(k5_edges):
        for w in (u, v):
            for i in (0, 1):
                edges.append((2 * w + i, 10 + e_ix))
    return make_graph(20, edges)


def holt_graph() -> Graph:
    """The 27-vertex, 4-regular vertex- and edge- but not arc-transitive graph.

    Vertices are pairs (x, y) in Z9 x Z3, id 3*x + y; (x, y) is joined to
    (4x + 1, y + 1) and (4x - 1, y + 1), arithmetic mod 9 and mod 3.
    """
    edges = []
    for x in range(9):
        for y in range(3):
            a = 3 * x + y
            for x2 in ((4 * x + 1) % 9, (4 * x - 1) % 9):
                b = 3 * x2 + (y + 1) % 3
                edges.append((a, b))
    return make_graph(27, edges)


_PLAIN = {
    "k4": _k4,
    "petersen": petersen_graph,
    "chorded_5_cycle": chorded_5_cycle,
    "folkman": folkman_graph,
    "holt": holt_graph,
}

_PARAMETRIC = {
    "cycle": (1, cycle_graph),
    "path": (1, path_graph),
    "star": (1, star_graph),
    "complete_bipartite": (2, complete_bipartite_graph),
}

CATALOG_NAMES = tuple(sorted(_PLAIN) + sorted(_PARAMETRIC))


def named_graph(name: str, *params: int) -> Graph:
    """Construct a catalog graph by name.

    Plain names: k4, petersen, chorded_5_cycle, folkman, holt.
    Parametric names: cycle(n), path(n), star(n), complete_bipartite(s, t).
    """
    if name in _PLAIN:
        if params:
            raise GraphError(f"{name!r} takes no parameters")
        return _PLAIN[name]()
    if name in _PARAMETRIC:
        arity, fn = _PARAMETRIC[name]
        if len(params) != arity:
            raise GraphError(f"{name!r} takes {arity} parameter(s), got {len(params)}")
        return fn(*params)
    raise GraphError(f"unknown catalog graph {name!r}; known: {', '.join(CATALOG_NAMES)}")
