"""Combinatorial embeddings: rotation systems, face tracing, genus, and the
backtracking search for genus-0 (planar) rotation systems.

A dart is an ordered pair (u, v): the end of edge {u, v} attached to u.
A rotation system fixes a cyclic order of the darts leaving each vertex,
recorded by the neighbor at the far end.  Faces are traced with the
successor rule: after entering v along (u, v), leave along (v, w) where w
follows u in the cyclic order at v.  The opposite convention would only
mirror every face; this one is fixed package-wide and is exercised by the
reflection-invariance tests.

The genus of a rotation system is (2c - V + E - F) / 2 with c the number
of connected components, so disconnected inputs are legal; an embedding
is planar exactly when the genus is 0.  Components without edges trace no
dart walks but still bound one face each, recorded as an empty walk, which
keeps the Euler count exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .errors import SearchBudgetExceeded
from .graphs import Graph, normalize_edge

Dart = tuple[int, int]


def reverse_dart(d: Dart) -> Dart:
    return (d[1], d[0])


class RotationSystem:
    """Per-vertex cyclic order of outgoing darts, stored by neighbor.

    Each cycle is canonicalized to start at the smallest neighbor, so two
    rotations of the same cyclic order compare equal.
    """

    __slots__ = ("order",)

    def __init__(self, order: Iterable[Iterable[int]]) -> None:
        canon = []
        for cyc in order:
            cyc = tuple(cyc)
            if len(set(cyc)) != len(cyc):
                raise ValueError("repeated neighbor in a rotation")
            if cyc:
                k = cyc.index(min(cyc))
                cyc = cyc[k:] + cyc[:k]
            canon.append(cyc)
        self.order = tuple(canon)

    @property
    def n(self) -> int:
        return len(self.order)

    def reversed(self) -> "RotationSystem":
        """The mirror embedding: every cyclic order reversed."""
        return RotationSystem(tuple(reversed(cyc)) for cyc in self.order)

    def is_valid_for(self, g: Graph) -> bool:
        if self.n != g.n:
            return False
        return all(
            tuple(sorted(cyc)) == g.adj[v] for v, cyc in enumerate(self.order)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RotationSystem):
            return NotImplemented
        return self.order == other.order

    def __hash__(self) -> int:
        return hash(self.order)

    def __repr__(self) -> str:
        return f"RotationSystem({list(self.order)})"


@dataclass(frozen=True)
class FaceSet:
    """Closed dart walks traced from a rotation system, plus Euler data."""

    faces: tuple[tuple[Dart, ...], ...]
    vertex_count: int
    edge_count: int
    face_count: int
    components: int
    genus: int


def trace_faces(g: Graph, rho: RotationSystem) -> FaceSet:
    """Trace all faces of the embedding (g, rho).

    Faces are reported in ascending order of their smallest dart, each
    walk starting at that dart; edge-free components contribute one empty
    walk apiece.
    """
    if not rho.is_valid_for(g):
        raise ValueError("rotation system does not match the graph")
    succ: dict[Dart, Dart] = {}
    for v, cyc in enumerate(rho.order):
        d = len(cyc)
        for i, u in enumerate(cyc):
            succ[(u, v)] = (v, cyc[(i + 1) % d])
    walks: list[tuple[Dart, ...]] = []
    seen: set[Dart] = set()
    for start in sorted(succ):
        if start in seen:
            continue
        walk = []
        dart = start
        while True:
            walk.append(dart)
            seen.add(dart)
            dart = succ[dart]
            if dart == start:
                break
        walks.append(tuple(walk))
    for v in range(g.n):
        if not g.adj[v]:
            walks.append(())  # an isolated vertex still bounds one face
    c = g.component_count()
    v_count, e_count, f_count = g.n, len(g.edges), len(walks)
    doubled = 2 * c - v_count + e_count - f_count
    assert doubled >= 0 and doubled % 2 == 0
    return FaceSet(tuple(walks), v_count, e_count, f_count, c, doubled // 2)


def genus(g: Graph, rho: RotationSystem) -> int:
    return trace_faces(g, rho).genus


def face_boundary(g: Graph, faces: FaceSet, f: int) -> Graph:
    """Subgraph of vertices and edges on face f's walk, ids compacted in
    ascending order of the original labels."""
    if not 0 <= f < faces.face_count:
        raise ValueError(f"face index {f} out of range")
    walk = faces.faces[f]
    verts = sorted({w for d in walk for w in d})
    relabel = {v: i for i, v in enumerate(verts)}
    edges = {normalize_edge(relabel[u], relabel[v]) for u, v in walk}
    return Graph(len(verts), edges)


def face_covering_all_edges(g: Graph, faces: FaceSet) -> int | None:
    """Index of a face whose walk visits every edge of g, if any."""
    all_edges = g.edges
    for i, walk in enumerate(faces.faces):
        if {normalize_edge(u, v) for u, v in walk} == all_edges:
            return i
    return None


def rotations_equivalent(rho1: RotationSystem, rho2: RotationSystem) -> bool:
    """Equal up to global reflection (the sphere's mirror symmetry)."""
    if rho1.n != rho2.n or any(
        tuple(sorted(a)) != tuple(sorted(b))
        for a, b in zip(rho1.order, rho2.order)
    ):
        raise ValueError("rotation systems belong to different graphs")
    return rho1 == rho2 or rho1 == rho2.reversed()


def enumerate_rotation_systems(g: Graph) -> Iterator[RotationSystem]:
    """All rotation systems of g: the product over vertices of the
    (deg - 1)! cyclic orders of their darts."""
    per_vertex: list[list[tuple[int, ...]]] = []
    for nbrs in g.adj:
        if len(nbrs) <= 2:
            per_vertex.append([nbrs])
        else:
            anchor, rest = nbrs[0], nbrs[1:]
            per_vertex.append(
                [(anchor,) + p for p in itertools.permutations(rest)]
            )
    for combo in itertools.product(*per_vertex):
        yield RotationSystem(combo)


# ---------------------------------------------------------------------------
# Genus-0 search
# ---------------------------------------------------------------------------


class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, limit: int | None) -> None:
        self.remaining = limit

    def tick(self) -> None:
        if self.remaining is None:
            return
        self.remaining -= 1
        if self.remaining < 0:
            raise SearchBudgetExceeded("embedding search budget exhausted")


def find_planar_rotation(
    g: Graph,
    node_budget: int | None = None,
    edge_bound_prefilter: bool = True,
) -> RotationSystem | None:
    """A genus-0 rotation system if one exists, else None.

    Backtracks over per-vertex cyclic orders with incremental face
    tracing: a closed walk in a partial assignment is a face of every
    completion, and each still-open face must pass through a vertex whose
    rotation is unassigned, which bounds the achievable face count and
    prunes branches that can no longer reach the planar count E - V + 2.
    Components are embedded independently.  Each component's densest
    vertex is assigned first and only one representative of each
    mirror-image pair of its cyclic orders is tried; remaining vertices
    are taken densest-first among neighbors of the assigned region.

    `node_budget` bounds the number of cyclic orders tried across the
    whole call; exceeding it raises SearchBudgetExceeded, which is
    distinct from a planarity verdict.  The prefilter rejects any
    component with more than 3V - 6 edges outright.
    """
    budget = _Budget(node_budget)
    orders: list[tuple[int, ...]] = [()] * g.n
    for comp in g.components():
        found = _embed_component(g, comp, budget, edge_bound_prefilter, None)
        if found is None:
            return None
        for v, cyc in found.items():
            orders[v] = cyc
    return RotationSystem(orders)


def find_covering_planar_rotation(
    g: Graph,
    node_budget: int | None = None,
) -> RotationSystem | None:
    """A genus-0 rotation system with one face covering every edge, if any.

    Same search as find_planar_rotation but with a stronger acceptance
    test at the leaves; meaningful for connected graphs only (a single
    face walk cannot leave a component), so disconnected inputs with
    edges in two components always yield None.
    """
    comps = g.components()
    if sum(1 for c in comps if any(g.adj[v] for v in c)) > 1:
        return None
    budget = _Budget(node_budget)
    orders: list[tuple[int, ...]] = [()] * g.n
    for comp in comps:
        edge_total = sum(len(g.adj[v]) for v in comp) // 2

        def covers(succ: dict[Dart, Dart], m: int = edge_total) -> bool:
            return _has_covering_face(succ, m)

        found = _embed_component(
            g, comp, budget, True, covers if edge_total else None
        )
        if found is None:
            return None
        for v, cyc in found.items():
            orders[v] = cyc
    return RotationSystem(orders)


def _has_covering_face(succ: dict[Dart, Dart], edge_total: int) -> bool:
    seen: set[Dart] = set()
    for start in succ:
        if start in seen:
            continue
        edges = set()
        dart = start
        while True:
            seen.add(dart)
            edges.add(normalize_edge(*dart))
            dart = succ[dart]
            if dart == start:
                break
        if len(edges) == edge_total:
            return True
    return False


def _embed_component(
    g: Graph,
    comp: tuple[int, ...],
    budget: _Budget,
    prefilter: bool,
    accept: Callable[[dict[Dart, Dart]], bool] | None,
) -> dict[int, tuple[int, ...]] | None:
    nv = len(comp)
    ne = sum(len(g.adj[v]) for v in comp) // 2
    if ne == 0:
        return {comp[0]: ()}
    if prefilter and nv >= 3 and ne > 3 * nv - 6:
        return None
    f_needed = ne - nv + 2

    # assignment order: densest vertex first, then greedily the vertex with
    # the most edges into the assigned prefix (links close faces sooner, so
    # the pruning bound bites earlier), degree as tiebreak
    start = max(comp, key=lambda v: (len(g.adj[v]), -v))
    order = [start]
    chosen_set = {start}
    while len(order) < nv:
        frontier = {
            w for v in order for w in g.adj[v] if w not in chosen_set
        }
        nxt = max(
            frontier,
            key=lambda v: (
                sum(1 for w in g.adj[v] if w in chosen_set),
                len(g.adj[v]),
                -v,
            ),
        )
        order.append(nxt)
        chosen_set.add(nxt)

    n = g.n
    size = n * n
    head_of = list(range(size))  # chain head, queried at chain tails
    tail_of = list(range(size))  # chain tail, queried at chain heads
    chain_len = [1] * size  # dart count of a chain, queried at its head
    chosen: dict[int, tuple[int, ...]] = {}
    closed = [0]  # faces closed so far
    closed_darts = [0]  # darts locked inside closed faces
    # each still-open face needs >= 3 darts once a component has >= 2 edges
    min_face_len = 3 if ne >= 2 else 1

    def link_cycle(v: int, cyc: tuple[int, ...]) -> list[tuple[int, int, int, int]]:
        """Define face successors for all darts entering v; return undo log."""
        log = []
        deg = len(cyc)
        for i, u in enumerate(cyc):
            d = u * n + v
            e = v * n + cyc[(i + 1) % deg]
            h = head_of[d]
            if h == e:
                closed[0] += 1
                closed_darts[0] += chain_len[h]
                log.append((-1, h, -1, -1))
            else:
                t = tail_of[e]
                log.append((t, head_of[t], h, tail_of[h]))
                head_of[t] = h
                tail_of[h] = t
                chain_len[h] += chain_len[e]
        return log

    def unlink(log: list[tuple[int, int, int, int]]) -> None:
        for t, old_head, h, old_tail in reversed(log):
            if t < 0:
                closed[0] -= 1
                closed_darts[0] -= chain_len[old_head]
            else:
                chain_len[h] -= chain_len[old_head]
                head_of[t] = old_head
                tail_of[h] = old_tail

    def cyclic_orders(v: int, first: bool) -> Iterator[tuple[int, ...]]:
        nbrs = g.adj[v]
        if len(nbrs) <= 2:
            yield nbrs
            return
        anchor, rest = nbrs[0], nbrs[1:]
        for perm in itertools.permutations(rest):
            if first and perm[0] > perm[-1]:
                continue  # mirror image already tried
            yield (anchor,) + perm

    total_darts = 2 * ne

    def assign(idx: int, darts_open: int) -> bool:
        if idx == nv:
            assert closed[0] == f_needed
            if accept is not None:
                succ: dict[Dart, Dart] = {}
                for v, cyc in chosen.items():
                    deg = len(cyc)
                    for i, u in enumerate(cyc):
                        succ[(u, v)] = (v, cyc[(i + 1) % deg])
                return accept(succ)
            return True
        v = order[idx]
        remaining = darts_open - len(g.adj[v])
        for cyc in cyclic_orders(v, idx == 0):
            budget.tick()
            log = link_cycle(v, cyc)
            future = (total_darts - closed_darts[0]) // min_face_len
            if remaining < future:
                future = remaining
            if closed[0] + future >= f_needed:
                chosen[v] = cyc
                if assign(idx + 1, remaining):
                    return True
                del chosen[v]
            unlink(log)
        return False

    if assign(0, total_darts):
        return dict(chosen)
    return None
