"""Candidate regions and the planar blue-coloring rules.

A candidate region between two anchor vertices is a disk of the embedding
bounded by two short demand-typed paths, such that the anchors alone could
satisfy everything strictly inside.  Anything buried in such a disk is
highly constrained, which is what the three coloring rules exploit: they
mark interior vertices as forbidden unless the vertex is one of the few
that could still be essential to a solution.
"""

from __future__ import annotations

from dataclasses import dataclass

from .instance import AnnotatedInstance, VecdomError, ReductionEvent, dominates
from .planarity import ClosedWalkRegion, RotationSystem, StaleEmbeddingError, cycle_sides


class MalformedPathError(VecdomError):
    pass


@dataclass(frozen=True)
class TypedPath:
    """A short anchor-to-anchor path that qualifies as a region boundary.

    Type 1 is any path of two edges.  Type 2 is a four-edge path whose
    inner pattern is 1-vertex, 0-vertex, anything, with the two inner ends
    not adjacent to the far anchors.  Type 3 is a three-edge path whose
    vertex next to one anchor has demand at most one.  Types 2 and 3 may
    match the pattern read from either anchor.
    """

    a1: int
    a2: int
    interior: tuple[int, ...]
    path_type: int

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.a1, *self.interior, self.a2)


@dataclass(frozen=True)
class RegionPartition:
    """Derived vertex classes of one region, recomputed against the live instance.

    high_boundary: internal boundary vertices with demand >= 2.
    fringe: interior vertices adjacent to an internal boundary vertex.
    core: interior vertices with no internal-boundary neighbor.
    core_dominators: selectable vertices that alone satisfy the whole core.
    crosslinks: region vertices adjacent to two high-demand boundary vertices.
    """

    high_boundary: frozenset[int]
    fringe: frozenset[int]
    core: frozenset[int]
    core_dominators: frozenset[int]
    crosslinks: frozenset[int]


@dataclass(frozen=True)
class CandidateRegion:
    a1: int
    a2: int
    outer1: TypedPath
    outer2: TypedPath
    side: ClosedWalkRegion
    interior: frozenset[int]
    high_boundary: frozenset[int]
    fringe: frozenset[int]
    core: frozenset[int]
    core_dominators: frozenset[int]
    crosslinks: frozenset[int]

    @property
    def boundary(self) -> frozenset[int]:
        return frozenset(self.side.boundary)

    @property
    def internal_boundary(self) -> frozenset[int]:
        return self.boundary - {self.a1, self.a2}

    @property
    def closed_vertices(self) -> frozenset[int]:
        return self.boundary | self.interior


def _check_path(instance: AnnotatedInstance, path, a1: int, a2: int) -> tuple[int, ...]:
    path = tuple(path)
    if len(path) < 2 or path[0] != a1 or path[-1] != a2 or a1 == a2:
        raise MalformedPathError(f"path {path} does not run from {a1} to {a2}")
    if len(set(path)) != len(path):
        raise MalformedPathError(f"path {path} repeats a vertex")
    for u, v in zip(path, path[1:]):
        if not instance.has_edge(u, v):
            raise MalformedPathError(f"path step ({u}, {v}) is not an edge")
    return path


def classify_path(instance: AnnotatedInstance, path, a1: int, a2: int) -> set[int]:
    """Types the given path satisfies when read from ``a1`` to ``a2``.

    The result has at most one element since each type fixes the path
    length; callers probing both orientations classify the reversed path
    separately.
    """
    path = _check_path(instance, path, a1, a2)
    edges = len(path) - 1
    d = instance.demand
    if edges == 2:
        return {1}
    if edges == 3:
        v = path[1]
        return {3} if d[v] <= 1 else set()
    if edges == 4:
        v, c, v2 = path[1], path[2], path[3]
        if (
            d[c] == 0
            and d[v] == 1
            and v not in instance.neighbors(a2)
            and v2 not in instance.neighbors(a1)
        ):
            return {2}
        return set()
    return set()


def _typed_paths(
    instance: AnnotatedInstance, a1: int, a2: int, max_paths: int | None
) -> tuple[list[TypedPath], bool]:
    """All typed simple paths between the anchors, and whether a cap truncated them."""
    if a1 == a2:
        raise MalformedPathError("anchors must be distinct")
    adj = instance._adj
    found: list[tuple[int, ...]] = []

    def extend(path: list[int], seen: set[int]) -> None:
        last = path[-1]
        if last == a2:
            if len(path) >= 3:
                found.append(tuple(path))
            return
        if len(path) == 5:
            return
        for u in sorted(adj[last]):
            if u not in seen:
                path.append(u)
                seen.add(u)
                extend(path, seen)
                path.pop()
                seen.discard(u)

    extend([a1], {a1})
    found.sort(key=lambda p: (len(p), p))
    typed: list[TypedPath] = []
    for p in found:
        types = classify_path(instance, p, a1, a2)
        types |= classify_path(instance, tuple(reversed(p)), a2, a1)
        if types:
            typed.append(TypedPath(a1, a2, p[1:-1], min(types)))
    truncated = False
    if max_paths is not None and len(typed) > max_paths:
        typed = typed[:max_paths]
        truncated = True
    return typed, truncated


def enumerate_boundary_paths(
    instance: AnnotatedInstance, a1: int, a2: int, max_paths: int | None = None
) -> list[TypedPath]:
    """Typed paths between two anchors, in a deterministic order."""
    paths, _ = _typed_paths(instance, a1, a2, max_paths)
    return paths


def _partition_sets(instance, a1, a2, internal_boundary, interior):
    d = instance.demand
    adj = instance._adj
    high_boundary = frozenset(v for v in internal_boundary if d[v] >= 2)
    fringe = frozenset(v for v in interior if adj[v] & internal_boundary)
    core = frozenset(interior) - fringe
    dominators = frozenset(
        v
        for v in instance.vertex_set()
        if v not in instance.forbidden and dominates(instance, {v}, core)
    )
    region_vertices = internal_boundary | {a1, a2} | interior
    crosslinks = frozenset(v for v in region_vertices if len(adj[v] & high_boundary) >= 2)
    return high_boundary, fringe, core, dominators, crosslinks


def region_partition(instance: AnnotatedInstance, region: CandidateRegion) -> RegionPartition:
    """Recompute the region's derived sets against the current instance state."""
    return RegionPartition(
        *_partition_sets(instance, region.a1, region.a2, region.internal_boundary, region.interior)
    )


def enumerate_candidate_regions(
    instance: AnnotatedInstance,
    rs: RotationSystem,
    a1: int,
    a2: int,
    max_paths: int | None = None,
) -> list[CandidateRegion]:
    """Inclusion-maximal candidate regions anchored at the given pair.

    Every internally disjoint pair of typed paths closes into a simple
    cycle; each side of that cycle qualifies when the anchors dominate all
    of its strictly interior vertices.  Among qualifying regions only
    those whose closed vertex set is not strictly contained in another's
    survive.
    """
    if not rs.describes(instance):
        raise StaleEmbeddingError("embedding no longer matches the instance")
    paths, _ = _typed_paths(instance, a1, a2, max_paths)
    return _regions_from_paths(instance, rs, a1, a2, paths)


def _regions_from_paths(instance, rs, a1, a2, paths) -> list[CandidateRegion]:
    adj = instance._adj
    d = instance.demand
    anchors = {a1, a2}
    raw = []
    seen_keys = set()
    for i in range(len(paths)):
        pi = paths[i]
        set_i = set(pi.interior)
        for j in range(i + 1, len(paths)):
            pj = paths[j]
            if set_i & set(pj.interior):
                continue
            cycle = (a1, *pi.interior, a2, *reversed(pj.interior))
            for side in cycle_sides(rs, cycle):
                ok = True
                for w in side.inside:
                    if d[w] > len(adj[w] & anchors):
                        ok = False
                        break
                if not ok:
                    continue
                closed = frozenset(cycle) | side.inside
                key = (closed, side.inside)
                if key in seen_keys:
                    continue
                seen_keys.add(key)
                raw.append((pi, pj, side, closed))
    maximal = []
    for pi, pj, side, closed in raw:
        if any(closed < other_closed for _, _, _, other_closed in raw):
            continue
        maximal.append((pi, pj, side, closed))
    maximal.sort(key=lambda item: (sorted(item[3]), sorted(item[2].inside), item[2].side))
    out = []
    for pi, pj, side, closed in maximal:
        internal_boundary = frozenset(side.boundary) - anchors
        sets = _partition_sets(instance, a1, a2, internal_boundary, side.inside)
        region = CandidateRegion(a1, a2, pi, pj, side, side.inside, *sets)
        if len(region.high_boundary) > 2:
            raise AssertionError("typed boundary admits at most two high-demand vertices")
        out.append(region)
    return out


def _color(instance: AnnotatedInstance, v: int, rule_id: int) -> ReductionEvent:
    instance.color_blue(v)
    return ReductionEvent(rule_id=rule_id, newly_blue=frozenset({v}))


def rule6(instance: AnnotatedInstance, region: CandidateRegion) -> list[ReductionEvent]:
    """Color interior vertices that neither reach the high-demand boundary nor
    could alone satisfy the core."""
    part = region_partition(instance, region)
    if not part.core:
        return []
    adj = instance._adj
    events = []
    for u in sorted(region.interior):
        if u in instance.forbidden:
            continue
        if adj[u] & part.high_boundary:
            continue
        if dominates(instance, {u}, part.core):
            continue
        events.append(_color(instance, u, 6))
    return events


def rule7(instance: AnnotatedInstance, region: CandidateRegion) -> list[ReductionEvent]:
    """Coloring rule for regions that have crosslinked boundary vertices.

    An interior vertex stays selectable only if it is a crosslink or core
    dominator itself, or it can cover the core (or an anchor's share of
    it) together with one suitable partner.
    """
    part = region_partition(instance, region)
    if not part.core or not part.crosslinks:
        return []
    adj = instance._adj
    near_high = set()
    for y in part.high_boundary:
        near_high |= adj[y]
    core_a1 = part.core & adj[region.a1]
    core_a2 = part.core & adj[region.a2]
    events = []
    for w in sorted(region.interior):
        if w in instance.forbidden:
            continue
        if w in part.crosslinks or dominates(instance, {w}, part.core):
            continue
        if any(dominates(instance, {w, w2}, part.core) for w2 in sorted(near_high)):
            continue
        if any(
            dominates(instance, {w, w2}, core_a1) or dominates(instance, {w, w2}, core_a2)
            for w2 in sorted(part.crosslinks)
        ):
            continue
        events.append(_color(instance, w, 7))
    return events


def rule8(instance: AnnotatedInstance, region: CandidateRegion) -> list[ReductionEvent]:
    """Coloring rule for regions without crosslinks.

    Exemptions: core dominators; vertices covering the core with a partner
    drawn from around an adjacent high-demand boundary vertex; and, when
    the high-demand boundary hangs off one anchor, vertices covering the
    rest of the core with a partner from around the high-demand boundary.
    """
    part = region_partition(instance, region)
    if not part.core or part.crosslinks:
        return []
    adj = instance._adj
    near_high = set()
    for y in part.high_boundary:
        near_high |= adj[y]
    events = []
    for u in sorted(region.interior):
        if u in instance.forbidden:
            continue
        if dominates(instance, {u}, part.core):
            continue
        partners = set()
        for y in sorted(adj[u] & part.high_boundary):
            partners |= adj[y]
        if any(dominates(instance, {u, u2}, part.core) for u2 in sorted(partners)):
            continue
        exempt = False
        for anchor in (region.a1, region.a2):
            if part.high_boundary <= adj[anchor]:
                rest = part.core - adj[anchor]
                if any(dominates(instance, {u, u2}, rest) for u2 in sorted(near_high)):
                    exempt = True
                    break
        if exempt:
            continue
        events.append(_color(instance, u, 8))
    return events
