"""Lobe decomposition: biconnected pieces, cut vertices, block-cut tree.

A lobe is a cut edge together with its endpoints, or a maximal biconnected
subgraph.  Lobe ids are assigned by sorting the discovered pieces by their
minimal contained edge, so the decomposition is fully deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, induced_subgraph, is_connected
from .symmetry import (automorphism_generators, canonical_certificate,
                       find_isomorphism, orbit_partition)


class DecompositionError(ValueError):
    """Input rejected by a decomposition operation."""


@dataclass(frozen=True)
class Lobe:
    """One lobe: its sorted vertex tuple and sorted edge tuple."""
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class LobeDecomposition:
    """Lobes, cut vertices and the block-cut tree of a connected graph.

    ``tree_edges`` pairs a lobe id with a cut vertex contained in it;
    ``lobes_at[v]`` lists the ids of the lobes containing vertex v.
    """
    lobes: tuple[Lobe, ...]
    cut_vertices: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]
    lobes_at: tuple[tuple[int, ...], ...]

    @property
    def lobe_count(self) -> int:
        return len(self.lobes)

    def lobe_neighbors(self, lobe_id: int) -> list[int]:
        """Lobes sharing a vertex with the given lobe."""
        out = set()
        for v in self.lobes[lobe_id].vertices:
            out.update(self.lobes_at[v])
        out.discard(lobe_id)
        return sorted(out)

    def to_json_dict(self, classes: "LobeClasses | None" = None) -> dict:
        doc = {
            "lobe_count": self.lobe_count,
            "lobes": [list(lobe.vertices) for lobe in self.lobes],
            "cut_vertices": list(self.cut_vertices),
            "tree_edges": [list(e) for e in self.tree_edges],
        }
        if classes is not None:
            doc["class_of"] = list(classes.class_of)
            doc["class_reps"] = list(classes.class_reps)
        return doc


def connectivity_class(g: Graph) -> str:
    """One of "disconnected", "single_K2", "biconnected", "connectivity_one".

    Aimed at graphs with at least one edge; the trivial graphs (0 or 1
    vertices) are binned under "disconnected".
    """
    n = g.vertex_count
    if n <= 1 or not is_connected(g):
        return "disconnected"
    if n == 2:
        return "single_K2"
    if any(_is_cut_vertex(g, v) for v in range(n)):
        return "connectivity_one"
    return "biconnected"


def _is_cut_vertex(g: Graph, v: int) -> bool:
    """Does removing v disconnect g?  Assumes g connected with >= 3 vertices."""
    n = g.vertex_count
    start = 0 if v != 0 else 1
    seen = [False] * n
    seen[v] = True
    seen[start] = True
    stack = [start]
    count = 1
    while stack:
        x = stack.pop()
        for y in g.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    return count != n - 1


def decompose(g: Graph) -> LobeDecomposition:
    """Compute the lobe decomposition of a connected graph with >= 1 edge."""
    if g.edge_count == 0:
        raise DecompositionError("cannot decompose an edgeless graph")
    if not is_connected(g):
        raise DecompositionError("cannot decompose a disconnected graph")
    raw = _biconnected_edge_groups(g)
    raw.sort(key=lambda edges: edges[0])
    lobes = []
    for edges in raw:
        vertices = sorted({v for e in edges for v in e})
        lobes.append(Lobe(tuple(vertices), tuple(edges)))
    lobes_at: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for i, lobe in enumerate(lobes):
        for v in lobe.vertices:
            lobes_at[v].append(i)
    cut_vertices = tuple(v for v in range(g.vertex_count) if len(lobes_at[v]) >= 2)
    tree_edges = tuple(sorted(
        (i, v) for v in cut_vertices for i in lobes_at[v]))
    return LobeDecomposition(tuple(lobes), cut_vertices, tree_edges,
                             tuple(tuple(l) for l in lobes_at))


def _biconnected_edge_groups(g: Graph) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected pieces, each sorted, via iterative DFS."""
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    groups: list[list[tuple[int, int]]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            v, parent, nbrs = stack[-1]
            advanced = False
            for w in nbrs:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adjacency[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            u = stack[-1][0]
            low[u] = min(low[u], low[v])
            if low[v] >= disc[u]:
                group = []
                while True:
                    e = edge_stack.pop()
                    group.append(e if e[0] < e[1] else (e[1], e[0]))
                    if e == (u, v):
                        break
                groups.append(sorted(group))
    return groups


@dataclass(frozen=True)
class LobeClasses:
    """Isomorphism classes of lobes with class-consistent orbit labels.

    For each class the representative is the lowest lobe id; ``sigma[i]``
    maps the representative's vertices (in their sorted order) onto lobe i.
    ``vertex_label[i][v]`` is the orbit label of vertex v inside lobe i,
    transported from the representative's automorphism orbits, so that every
    isomorphism between class members preserves labels.
    """
    class_of: tuple[int, ...]
    class_reps: tuple[int, ...]
    sigma: tuple[tuple[int, ...], ...]
    vertex_label: tuple[dict, ...]
    label_counts: tuple[int, ...]

    @property
    def class_count(self) -> int:
        return len(self.class_reps)


def lobe_classes(g: Graph, d: LobeDecomposition) -> LobeClasses:
    """Group lobes by isomorphism and install consistent orbit labels."""
    subgraphs = []
    for lobe in d.lobes:
        sub, originals = induced_subgraph(g, lobe.vertices)
        subgraphs.append((sub, originals))
    by_cert: dict[bytes, int] = {}
    class_of = []
    reps: list[int] = []
    for i, (sub, _) in enumerate(subgraphs):
        cert = canonical_certificate(sub)
        if cert not in by_cert:
            by_cert[cert] = len(reps)
            reps.append(i)
        class_of.append(by_cert[cert])

    # orbit labels on each representative, ordered by minimal original vertex
    rep_orbit_cells: list[list[tuple[int, ...]]] = []
    for rep in reps:
        sub, originals = subgraphs[rep]
        gens = automorphism_generators(sub)
        cells = orbit_partition(gens, "vertices").cells
        orig_cells = [tuple(originals[x] for x in cell) for cell in cells]
        orig_cells.sort(key=lambda cell: cell[0])
        rep_orbit_cells.append(orig_cells)

    sigma: list[tuple[int, ...]] = []
    vertex_label: list[dict] = []
    for i, (sub, originals) in enumerate(subgraphs):
        k = class_of[i]
        rep = reps[k]
        rep_sub, rep_originals = subgraphs[rep]
        if i == rep:
            mapping = tuple(range(sub.vertex_count))
        else:
            mapping = find_isomorphism(rep_sub, sub)
            if mapping is None:  # certificates matched, so this cannot happen
                raise RuntimeError("certificate collision between lobes")
        sig = tuple(originals[mapping[x]] for x in range(len(rep_originals)))
        sigma.append(sig)
        rep_pos = {v: x for x, v in enumerate(rep_originals)}
        labels = {}
        for j, cell in enumerate(rep_orbit_cells[k]):
            for rv in cell:
                labels[sig[rep_pos[rv]]] = j
        vertex_label.append(labels)
    label_counts = tuple(len(cells) for cells in rep_orbit_cells)
    return LobeClasses(tuple(class_of), tuple(reps), tuple(sigma),
                       tuple(vertex_label), label_counts)


@dataclass(frozen=True)
class LobeBall:
    """A lobe-ball: the induced subgraph plus its embedding into the host."""
    graph: Graph
    originals: tuple[int, ...]
    lobe_ids: tuple[int, ...]

    def to_original(self, v: int) -> int:
        return self.originals[v]


def lobe_ball(g: Graph, d: LobeDecomposition, lobe_id: int, n: int) -> LobeBall:
    """The radius-n ball of lobes around ``lobe_id``.

    Radius 0 is the lobe itself; each step adds every lobe sharing a vertex
    with the current ball.  The returned subgraph uses dense local ids with
    ``originals`` giving the embedding.
    """
    if not (0 <= lobe_id < d.lobe_count):
        raise DecompositionError(f"invalid lobe id {lobe_id}")
    if n < 0:
        raise DecompositionError(f"radius must be nonnegative, got {n}")
    included = {lobe_id}
    frontier = [lobe_id]
    for _ in range(n):
        new = []
        for lid in frontier:
            for nb in d.lobe_neighbors(lid):
                if nb not in included:
                    included.add(nb)
                    new.append(nb)
        if not new:
            break
        frontier = new
    lobe_ids = tuple(sorted(included))
    vertices = sorted({v for lid in lobe_ids for v in d.lobes[lid].vertices})
    sub, originals = induced_subgraph(g, vertices)
    return LobeBall(sub, originals, lobe_ids)


def lobe_distances(d: LobeDecomposition, lobe_id: int) -> list[int]:
    """Distances from one lobe to all lobes in the lobe-adjacency graph."""
    dist = [-1] * d.lobe_count
    dist[lobe_id] = 0
    queue = [lobe_id]
    while queue:
        lid = queue.pop(0)
        for nb in d.lobe_neighbors(lid):
            if dist[nb] == -1:
                dist[nb] = dist[lid] + 1
                queue.append(nb)
    return dist
