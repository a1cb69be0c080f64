"""Graph symmetry kernels: automorphisms, canonical forms, orbits, stabilizers.

One search engine serves three jobs: it refines an ordered partition to an
equitable one, backtracks over individualizations, and reports both a
canonical labeling (minimum relabeled edge list over all leaves) and a
generating set for the automorphism group (from leaf collisions).  Subtrees
equivalent under already-discovered automorphisms are pruned, which changes
neither the canonical form nor the group generated.

Everything here is a pure function of its inputs; all orders (cell order,
branch order, orbit cell order) are fixed so output is deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph

Perm = tuple[int, ...]

GROUP_ORDER_DEGREE_BOUND = 4096


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(p: Perm, q: Perm) -> Perm:
    """The permutation applying q first, then p."""
    return tuple(p[x] for x in q)


def inverse_perm(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_permutation(images, n: int) -> bool:
    return len(images) == n and sorted(images) == list(range(n))


def is_automorphism(g: Graph, p) -> bool:
    if not is_permutation(p, g.vertex_count):
        return False
    return all(g.has_edge(p[u], p[v]) for u, v in g.edges)


@dataclass(frozen=True)
class GeneratorSet:
    """Permutation generators of a group acting on 0..degree-1.

    ``kind`` records what the set is meant to generate: the full automorphism
    group of a graph ("aut"), a lobe stabilizer ("stabilizer"), or a
    user-supplied subgroup ("user").
    """
    degree: int
    generators: tuple[Perm, ...]
    kind: str = "user"

    def __iter__(self):
        return iter(self.generators)


def generator_set(perms, degree: int, kind: str = "user",
                  graph: Graph | None = None) -> GeneratorSet:
    """Validate and freeze a list of permutations into a GeneratorSet."""
    frozen = []
    for p in perms:
        p = tuple(p)
        if not is_permutation(p, degree):
            raise ValueError(f"not a permutation of 0..{degree - 1}: {p}")
        if graph is not None and not is_automorphism(graph, p):
            raise ValueError(f"permutation is not an automorphism: {p}")
        frozen.append(p)
    return GeneratorSet(degree, tuple(frozen), kind)


@dataclass(frozen=True)
class OrbitPartition:
    """Orbits of a permutation group acting on a finite domain.

    ``cells`` are sorted by minimal element and each cell is sorted; the
    domain kind is one of "vertices", "edges", "arcs", "lobes".
    """
    domain: str
    elements: tuple
    cells: tuple[tuple, ...]

    @property
    def cell_count(self) -> int:
        return len(self.cells)

    def cell_index(self) -> dict:
        out = {}
        for i, cell in enumerate(self.cells):
            for x in cell:
                out[x] = i
        return out


# ---------------------------------------------------------------------------
# Refinement + backtracking engine
# ---------------------------------------------------------------------------

class _Partition:
    """Ordered partition with stable cell ids for cheap splitting.

    ``order`` lists cell ids in partition order; ``members[cid]`` the sorted
    vertices of a cell; ``cell_of[v]`` the id of v's cell.  Splits replace
    one id by fresh ids in place, so only the split cell's vertices are
    touched.
    """

    __slots__ = ("order", "members", "cell_of", "next_id")

    def __init__(self, cells: list[list[int]], n: int):
        self.order = list(range(len(cells)))
        self.members = {i: sorted(c) for i, c in enumerate(cells)}
        self.cell_of = [0] * n
        for i, c in enumerate(cells):
            for v in c:
                self.cell_of[v] = i
        self.next_id = len(cells)

    def clone(self) -> "_Partition":
        out = _Partition.__new__(_Partition)
        out.order = list(self.order)
        out.members = {i: list(c) for i, c in self.members.items()}
        out.cell_of = list(self.cell_of)
        out.next_id = self.next_id
        return out

    def split(self, cid: int, fragments: list[list[int]]) -> list[int]:
        """Replace a cell by ordered fragments; returns the fresh ids."""
        ids = []
        for frag in fragments:
            fid = self.next_id
            self.next_id += 1
            self.members[fid] = frag
            for v in frag:
                self.cell_of[v] = fid
            ids.append(fid)
        pos = self.order.index(cid)
        self.order[pos:pos + 1] = ids
        del self.members[cid]
        return ids


class _Engine:
    """Shared search for canonical labeling and automorphism generators."""

    def __init__(self, g: Graph, initial_cells: list[list[int]]):
        self.n = g.vertex_count
        self.adj = g.adjacency
        self.edges = g.edges
        self.initial_cells = [sorted(c) for c in initial_cells]
        self.first_key = None
        self.first_lab = None
        self.best_key = None
        self.best_lab = None
        self.gens: list[Perm] = []
        self._gen_seen: set[Perm] = set()
        self._cnt = [0] * self.n

    def run(self) -> tuple[tuple, Perm, list[Perm]]:
        """Returns (canonical edge tuple, canonical labeling, generators)."""
        if self.n == 0:
            return (), (), []
        part = _Partition(self.initial_cells, self.n)
        self._refine(part, [list(c) for c in self.initial_cells])
        self._node(part, ())
        return self.best_key, self.best_lab, self.gens

    def _refine(self, part: _Partition, queue: list[list[int]]) -> None:
        """Refine in place to an equitable partition.

        Worklist discipline: pop a splitter set, recount its neighbors, and
        split every affected cell into fragments ordered by ascending count;
        fragments join the queue.  All decisions depend only on counts and
        partition structure, so isomorphic inputs refine along mirrored
        paths.
        """
        adj = self.adj
        cnt = self._cnt
        members = part.members
        cell_of = part.cell_of
        queue = deque(queue)
        while queue:
            splitter = queue.popleft()
            touched: dict[int, list[int]] = {}
            for w in splitter:
                for x in adj[w]:
                    if cnt[x] == 0:
                        touched.setdefault(cell_of[x], []).append(x)
                    cnt[x] += 1
            if len(touched) > 1:
                # partition-position order keeps the run label-independent
                position = {cid: i for i, cid in enumerate(part.order)}
                affected = sorted(touched, key=position.__getitem__)
            else:
                affected = list(touched)
            for cid in affected:
                cell = members[cid]
                if len(cell) == 1:
                    continue
                hit = touched[cid]
                if len(hit) == len(cell) and len({cnt[v] for v in hit}) == 1:
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(cnt[v], []).append(v)
                if len(groups) > 1:
                    frags = [groups[key] for key in sorted(groups)]
                    part.split(cid, frags)
                    queue.extend(list(f) for f in frags)
            for hit in touched.values():
                for v in hit:
                    cnt[v] = 0

    def _leaf(self, part: _Partition) -> None:
        lab = [0] * self.n
        for pos, cid in enumerate(part.order):
            lab[part.members[cid][0]] = pos
        lab = tuple(lab)
        key = tuple(sorted(
            (lab[u], lab[v]) if lab[u] < lab[v] else (lab[v], lab[u])
            for u, v in self.edges))
        if self.first_key is None:
            self.first_key = key
            self.first_lab = lab
            self.best_key = key
            self.best_lab = lab
            return
        if key == self.first_key:
            self._emit(lab, self.first_lab)
        if key < self.best_key:
            self.best_key = key
            self.best_lab = lab
        elif key == self.best_key and self.best_lab is not self.first_lab:
            self._emit(lab, self.best_lab)

    def _emit(self, lab: Perm, ref_lab: Perm) -> None:
        """Record the automorphism turning leaf ``lab`` into leaf ``ref_lab``."""
        ref_inv = inverse_perm(ref_lab)
        g = tuple(ref_inv[lab[v]] for v in range(self.n))
        if g != identity_perm(self.n) and g not in self._gen_seen:
            self._gen_seen.add(g)
            self.gens.append(g)

    def _node(self, part: _Partition, prefix: tuple[int, ...]) -> None:
        target = -1
        size = 0
        for cid in part.order:
            k = len(part.members[cid])
            if k > size and k > 1:
                target = cid
                size = k
        if target < 0:
            self._leaf(part)
            return
        tried: list[int] = []
        for v in part.members[target]:
            if tried and self._in_discovered_orbit(v, tried, prefix):
                continue
            tried.append(v)
            child = part.clone()
            rest = [w for w in part.members[target] if w != v]
            child.split(target, [[v], rest])
            self._refine(child, [[v]])
            self._node(child, prefix + (v,))

    def _in_discovered_orbit(self, v: int, tried: list[int],
                             prefix: tuple[int, ...]) -> bool:
        """Is v reachable from an already-tried sibling under known
        automorphisms that fix the individualized prefix pointwise?"""
        fixers = [g for g in self.gens if all(g[p] == p for p in prefix)]
        if not fixers:
            return False
        orbit = set(tried)
        stack = list(tried)
        while stack:
            x = stack.pop()
            for g in fixers:
                y = g[x]
                if y == v:
                    return True
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        return False


def _color_cells(n: int, colors) -> tuple[list[list[int]], tuple]:
    """Initial partition from a vertex->sortable-key coloring."""
    if colors is None:
        return [list(range(n))], ()
    groups: dict = {}
    for v in range(n):
        groups.setdefault(colors[v], []).append(v)
    keys = sorted(groups)
    cells = [groups[k] for k in keys]
    signature = tuple((repr(k), len(groups[k])) for k in keys)
    return cells, signature


def _run_engine(g: Graph, colors=None) -> tuple[tuple, Perm, list[Perm], tuple]:
    cells, signature = _color_cells(g.vertex_count, colors)
    key, lab, gens = _Engine(g, cells).run()
    return key, lab, gens, signature


def automorphism_generators(g: Graph, colors=None) -> GeneratorSet:
    """Generators of Aut(g) (color-preserving automorphisms when colors given)."""
    _, _, gens, _ = _run_engine(g, colors)
    return GeneratorSet(g.vertex_count, tuple(gens), "aut")


def canonical_certificate(g: Graph, colors=None) -> bytes:
    """A byte string equal for isomorphic graphs and unequal otherwise.

    With ``colors``, equality means color-preserving isomorphism (for graphs
    whose color signatures match).
    """
    key, _, _, signature = _run_engine(g, colors)
    head = f"{g.vertex_count} {g.edge_count};{signature!r};".encode()
    body = b",".join(b"%d-%d" % e for e in key)
    return head + body


def canonical_labeling(g: Graph, colors=None) -> Perm:
    """The relabeling that carries g onto its canonical form."""
    _, lab, _, _ = _run_engine(g, colors)
    return lab


def find_isomorphism(g1: Graph, g2: Graph, colors1=None, colors2=None):
    """A vertex bijection g1 -> g2 preserving adjacency, or None.

    With colors, only color-preserving isomorphisms are considered.
    """
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return None
    key1, lab1, _, sig1 = _run_engine(g1, colors1)
    key2, lab2, _, sig2 = _run_engine(g2, colors2)
    if key1 != key2 or sig1 != sig2:
        return None
    lab2_inv = inverse_perm(lab2)
    return tuple(lab2_inv[lab1[v]] for v in range(g1.vertex_count))


# ---------------------------------------------------------------------------
# Orbits and stabilizers
# ---------------------------------------------------------------------------

def _edge_image(p: Perm, e: tuple[int, int]) -> tuple[int, int]:
    a, b = p[e[0]], p[e[1]]
    return (a, b) if a < b else (b, a)


def orbit_partition(gens: GeneratorSet, domain: str, *,
                    graph: Graph | None = None,
                    decomposition=None) -> OrbitPartition:
    """Orbits of the generated group acting on vertices, edges, arcs or lobes.

    ``graph`` is required for edges/arcs, ``decomposition`` for lobes.
    Raises ValueError when a generator does not act on the domain.
    """
    if domain == "vertices":
        elements: list = list(range(gens.degree))
        act = lambda p, v: p[v]
    elif domain == "edges":
        if graph is None:
            raise ValueError("edge orbits need the graph as context")
        _check_degree(gens, graph)
        elements = list(graph.edges)
        act = _edge_image
    elif domain == "arcs":
        if graph is None:
            raise ValueError("arc orbits need the graph as context")
        _check_degree(gens, graph)
        elements = sorted([(u, v) for u, v in graph.edges]
                          + [(v, u) for u, v in graph.edges])
        act = lambda p, a: (p[a[0]], p[a[1]])
    elif domain == "lobes":
        if decomposition is None:
            raise ValueError("lobe orbits need the decomposition as context")
        lobe_of = _lobe_action_table(gens, decomposition)
        elements = list(range(len(decomposition.lobes)))
        act = lambda p, lobe_id: lobe_of[p][lobe_id]
    else:
        raise ValueError(f"unknown domain {domain!r}")

    index = {x: i for i, x in enumerate(elements)}
    cell_of = [-1] * len(elements)
    cells = []
    for start in elements:
        if cell_of[index[start]] != -1:
            continue
        orbit = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for p in gens.generators:
                y = act(p, x)
                if y not in index:
                    raise ValueError(
                        f"generator does not act on the {domain} domain")
                if y not in orbit:
                    orbit.add(y)
                    stack.append(y)
        cell = tuple(sorted(orbit))
        for x in cell:
            cell_of[index[x]] = len(cells)
        cells.append(cell)
    return OrbitPartition(domain, tuple(elements), tuple(cells))


def _check_degree(gens: GeneratorSet, graph: Graph) -> None:
    if gens.degree != graph.vertex_count:
        raise ValueError(
            f"generator degree {gens.degree} does not match graph on "
            f"{graph.vertex_count} vertices")


def _lobe_action_table(gens: GeneratorSet, decomposition) -> dict[Perm, list[int]]:
    """For each generator, the induced permutation of lobe ids."""
    edge_key = {frozenset(lobe.edges): i
                for i, lobe in enumerate(decomposition.lobes)}
    table = {}
    for p in gens.generators:
        images = []
        for lobe in decomposition.lobes:
            mapped = frozenset(_edge_image(p, e) for e in lobe.edges)
            if mapped not in edge_key:
                raise ValueError("generator does not permute the lobes")
            images.append(edge_key[mapped])
        table[p] = images
    return table


def lobe_stabilizer(g: Graph, gens: GeneratorSet, decomposition,
                    lobe_id: int) -> GeneratorSet:
    """Schreier generators for the setwise stabilizer of one lobe.

    ``gens`` must generate Aut(g); the result generates the subgroup mapping
    the chosen lobe onto itself.
    """
    if not (0 <= lobe_id < len(decomposition.lobes)):
        raise ValueError(f"invalid lobe id {lobe_id}")
    _check_degree(gens, g)
    lobe_of = _lobe_action_table(gens, decomposition)
    n = gens.degree
    ident = identity_perm(n)
    transversal: dict[int, Perm] = {lobe_id: ident}
    queue = [lobe_id]
    while queue:
        lam = queue.pop(0)
        for p in gens.generators:
            image = lobe_of[p][lam]
            if image not in transversal:
                transversal[image] = compose(p, transversal[lam])
                queue.append(image)
    out: list[Perm] = []
    seen: set[Perm] = set()
    for lam in sorted(transversal):
        t = transversal[lam]
        for p in gens.generators:
            image = lobe_of[p][lam]
            u = compose(inverse_perm(transversal[image]), compose(p, t))
            if u != ident and u not in seen:
                seen.add(u)
                out.append(u)
    return GeneratorSet(n, tuple(out), "stabilizer")


def restrict_to(gens: GeneratorSet, vertices) -> GeneratorSet:
    """Restrict an action to an invariant vertex subset, relabeled densely.

    ``vertices`` must be closed under every generator.
    """
    ordered = sorted(set(vertices))
    local = {v: i for i, v in enumerate(ordered)}
    perms = []
    for p in gens.generators:
        images = [0] * len(ordered)
        for v in ordered:
            w = p[v]
            if w not in local:
                raise ValueError("vertex set is not invariant under the generators")
            images[local[v]] = local[w]
        perms.append(tuple(images))
    return GeneratorSet(len(ordered), tuple(perms), gens.kind)


# ---------------------------------------------------------------------------
# Group order via a stabilizer chain
# ---------------------------------------------------------------------------

class _Chain:
    """Deterministic Schreier-Sims chain: orbit + transversal per base point.

    ``gens`` holds only the generators first registered at this level; the
    full generating set for the level's group is ``generators()``, which also
    pulls everything registered deeper (those fix this level's base point
    prefix by construction).
    """

    __slots__ = ("degree", "basepoint", "gens", "transversal", "stab")

    def __init__(self, degree: int):
        self.degree = degree
        self.basepoint: int | None = None
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {}
        self.stab: _Chain | None = None

    def generators(self) -> list[Perm]:
        if self.stab is None:
            return list(self.gens)
        return self.stab.generators() + self.gens

    def order(self) -> int:
        if self.basepoint is None:
            return 1
        return len(self.transversal) * self.stab.order()

    def sift(self, p: Perm) -> Perm:
        if self.basepoint is None:
            return p
        x = p[self.basepoint]
        if x not in self.transversal:
            return p
        return self.stab.sift(compose(inverse_perm(self.transversal[x]), p))

    def add(self, p: Perm) -> None:
        p = self.sift(p)
        if p == identity_perm(self.degree):
            return
        if self.basepoint is None:
            self.basepoint = next(i for i, x in enumerate(p) if x != i)
            self.stab = _Chain(self.degree)
        if p[self.basepoint] == self.basepoint:
            self.stab.add(p)
        else:
            self.gens.append(p)
        self._rebuild_orbit()
        self._close()

    def _rebuild_orbit(self) -> None:
        gens = self.generators()
        self.transversal = {self.basepoint: identity_perm(self.degree)}
        queue = [self.basepoint]
        while queue:
            x = queue.pop(0)
            for g in gens:
                y = g[x]
                if y not in self.transversal:
                    self.transversal[y] = compose(g, self.transversal[x])
                    queue.append(y)

    def _close(self) -> None:
        # Schreier's lemma: sift every Schreier generator into the stabilizer
        gens = self.generators()
        for x in sorted(self.transversal):
            t = self.transversal[x]
            for g in gens:
                u = compose(inverse_perm(self.transversal[g[x]]), compose(g, t))
                if u != identity_perm(self.degree):
                    self.stab.add(u)


def group_order(gens: GeneratorSet,
                degree_bound: int = GROUP_ORDER_DEGREE_BOUND) -> int:
    """Order of the generated group via a stabilizer chain."""
    if gens.degree > degree_bound:
        raise ValueError(
            f"degree {gens.degree} exceeds the configured bound {degree_bound}")
    chain = _Chain(gens.degree)
    for p in gens.generators:
        chain.add(p)
    return chain.order()
