"""Combinatorial planar embeddings.

A rotation system (the cyclic order of neighbors around each vertex) fixes
a planar embedding without coordinates.  Faces fall out of a standard dart
traversal, and the two sides of any simple cycle can then be separated
purely combinatorially: two faces lie on the same side exactly when they
can be glued along edges that do not belong to the cycle.
"""

from __future__ import annotations

import networkx as nx

from .instance import AnnotatedInstance, InvalidInstanceError, VecdomError, validate

from dataclasses import dataclass


class NonPlanarError(VecdomError):
    def __init__(self, witness_edges=None):
        detail = f" (witness subgraph with {len(witness_edges)} edges)" if witness_edges else ""
        super().__init__("graph is not planar" + detail)
        self.witness_edges = witness_edges or []


class NotACycleError(VecdomError):
    pass


class StaleEmbeddingError(VecdomError):
    pass


@dataclass(frozen=True)
class ClosedWalkRegion:
    """One side of a simple cycle: the boundary plus the strictly interior vertices."""

    boundary: tuple[int, ...]
    side: int
    inside: frozenset[int]


class RotationSystem:
    """Planar embedding as per-vertex cyclic neighbor orders, with derived faces.

    Faces are tuples of darts (directed edges); every dart belongs to
    exactly one face.  Immutable after construction, so safe to share
    across threads.
    """

    def __init__(self, rotation: dict[int, tuple[int, ...]]):
        self.rotation = {v: tuple(nbrs) for v, nbrs in sorted(rotation.items())}
        self._index = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in self.rotation.items()}
        self.faces = self._trace_faces()
        self.face_of = {}
        for fi, face in enumerate(self.faces):
            for dart in face:
                self.face_of[dart] = fi
        self.component_of = self._components()
        self._check_euler()
        self.outer_face_of_component = self._outer_faces()
        self.outer_face = None
        for v in self.rotation:
            comp = self.component_of[v]
            if comp in self.outer_face_of_component:
                self.outer_face = self.outer_face_of_component[comp]
                break
        edge_comps = len(self.outer_face_of_component)
        self.face_count = len(self.faces) - edge_comps + 1

    # The successor dart of (u, v) starts at v and leaves toward the
    # neighbor after u in v's cyclic order; iterating this rule walks the
    # boundary of one face.
    def _next_dart(self, u: int, v: int) -> tuple[int, int]:
        nbrs = self.rotation[v]
        i = self._index[v][u]
        return (v, nbrs[(i + 1) % len(nbrs)])

    def _trace_faces(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        faces = []
        seen = set()
        for u in self.rotation:
            for v in self.rotation[u]:
                start = (u, v)
                if start in seen:
                    continue
                walk = []
                dart = start
                while True:
                    walk.append(dart)
                    seen.add(dart)
                    dart = self._next_dart(*dart)
                    if dart == start:
                        break
                faces.append(tuple(walk))
        return tuple(faces)

    def _components(self) -> dict[int, int]:
        comp = {}
        for v in self.rotation:
            if v in comp:
                continue
            cid = v
            stack = [v]
            comp[v] = cid
            while stack:
                x = stack.pop()
                for y in self.rotation[x]:
                    if y not in comp:
                        comp[y] = cid
                        stack.append(y)
        return comp

    def _check_euler(self) -> None:
        stats: dict[int, list[int]] = {}
        for v in self.rotation:
            c = self.component_of[v]
            stats.setdefault(c, [0, 0, 0])
            stats[c][0] += 1
            stats[c][1] += len(self.rotation[v])
        for face in self.faces:
            stats[self.component_of[face[0][0]]][2] += 1
        for c, (n_c, m2_c, f_c) in stats.items():
            m_c = m2_c // 2
            if m_c and n_c - m_c + f_c != 2:
                raise AssertionError(
                    f"embedding violates Euler's formula on component {c}: "
                    f"V={n_c} E={m_c} F={f_c}"
                )

    def _outer_faces(self) -> dict[int, int]:
        best: dict[int, tuple] = {}
        for fi, face in enumerate(self.faces):
            c = self.component_of[face[0][0]]
            key = (-len(face), min(face))
            if c not in best or key < best[c][0]:
                best[c] = (key, fi)
        return {c: fi for c, (key, fi) in best.items()}

    def edge_set(self) -> set[tuple[int, int]]:
        return {(u, v) for u in self.rotation for v in self.rotation[u] if u < v}

    def describes(self, instance: AnnotatedInstance) -> bool:
        """Whether this embedding still matches the instance's vertices and edges."""
        if set(self.rotation) != set(instance.vertex_set()):
            return False
        return self.edge_set() == set(instance.edges())


def embed(instance: AnnotatedInstance) -> RotationSystem:
    """Certify planarity and return a deterministic combinatorial embedding.

    Vertices and edges are fed to the planarity test in sorted order, so a
    fixed input always yields the same rotation system.  Raises
    ``NonPlanarError`` with a witness subgraph otherwise.
    """
    # An edge count above 3n-6 is evidence of non-planarity, not malformed
    # input; let the planarity test refuse it with a witness.
    violations = [v for v in validate(instance) if not v.startswith("m > 3n-6")]
    if violations:
        raise InvalidInstanceError(violations)
    G = nx.Graph()
    G.add_nodes_from(instance.vertices)
    G.add_edges_from(instance.edges())
    ok, embedding = nx.check_planarity(G, counterexample=False)
    if not ok:
        witness = nx.algorithms.planarity.get_counterexample(G)
        raise NonPlanarError(sorted(tuple(sorted(e)) for e in witness.edges()))
    rotation = {v: tuple(embedding.neighbors_cw_order(v)) for v in instance.vertices}
    return RotationSystem(rotation)


def faces(rs: RotationSystem) -> list[tuple[tuple[int, int], ...]]:
    """All faces of the embedding, each as a cyclic walk of darts."""
    return list(rs.faces)


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def cycle_sides(rs: RotationSystem, cycle) -> tuple[ClosedWalkRegion, ClosedWalkRegion]:
    """Split the embedded graph along a simple cycle into its two sides.

    Faces that share a non-cycle edge are merged; for the cycle's own
    component exactly two groups remain, one per side.  Vertices of other
    components count as lying on the side that holds the cycle component's
    outer face, matching an embedding that nests every other component
    there.
    """
    cycle = tuple(cycle)
    if len(cycle) < 3:
        raise NotACycleError("a simple cycle needs at least three vertices")
    if len(set(cycle)) != len(cycle):
        raise NotACycleError("cycle repeats a vertex")
    for v in cycle:
        if v not in rs.rotation:
            raise NotACycleError(f"cycle vertex {v} is not embedded")
    cyc_edges = set()
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        if v not in rs._index[u]:
            raise NotACycleError(f"cycle step ({u}, {v}) is not an edge")
        cyc_edges.add((u, v) if u < v else (v, u))
    if len(cyc_edges) != len(cycle):
        raise NotACycleError("cycle repeats an edge")

    uf = _UnionFind(len(rs.faces))
    for u in rs.rotation:
        for v in rs.rotation[u]:
            if u < v and (u, v) not in cyc_edges:
                uf.union(rs.face_of[(u, v)], rs.face_of[(v, u)])

    c0, c1 = cycle[0], cycle[1]
    group_a = uf.find(rs.face_of[(c0, c1)])
    group_b = uf.find(rs.face_of[(c1, c0)])
    if group_a == group_b:
        raise AssertionError("cycle does not separate the embedding")

    comp = rs.component_of[c0]
    outer_group = uf.find(rs.outer_face_of_component[comp])
    boundary = set(cycle)
    inside_a: set[int] = set()
    inside_b: set[int] = set()
    for v in rs.rotation:
        if v in boundary:
            continue
        if rs.component_of[v] == comp:
            g = uf.find(rs.face_of[(v, rs.rotation[v][0])])
        else:
            g = outer_group
        if g == group_a:
            inside_a.add(v)
        elif g == group_b:
            inside_b.add(v)
        else:
            raise AssertionError(f"vertex {v} not assigned to either side of the cycle")
    return (
        ClosedWalkRegion(cycle, 0, frozenset(inside_a)),
        ClosedWalkRegion(cycle, 1, frozenset(inside_b)),
    )
