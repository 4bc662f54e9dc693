"""General reduction rules and the fixpoint engine.

Rules 1-5 and 13 shrink the graph directly; rules 9-12 create and exploit
forbidden ("blue") vertices; rules 6-8 live in :mod:`vecdom.regions` and
need a planar embedding.  ``run_fixpoint`` drives everything to
exhaustion, logging one replayable event per atomic change, and finally
applies the kernel-size certificate: a fully reduced instance larger than
101 times its budget cannot have a solution.

Every rule mutates the given instance in place and returns the events it
fired.  All scans run in vertex-id order so runs are reproducible.

A note on forbidden vertices: several rules justify themselves by swapping
a hypothetical solution vertex for a named replacement, which silently
assumes the replacement is selectable.  Each of those rules therefore
skips candidates whose replacement targets are forbidden; this keeps every
rule sound for arbitrary forbidden sets supplied in input files, not just
for vertices the engine itself colored.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .instance import (
    AnnotatedInstance,
    InvalidInstanceError,
    KERNEL_BOUND,
    ReductionEvent,
    Status,
    force_into_solution,
    neighborhood,
    validate,
)
from .planarity import embed
from .regions import rule6, rule7, rule8, _typed_paths, _regions_from_paths

KERNEL_FACTOR = 101

RULE_PRIORITY = (1, 2, 3, 13, 4, 5, 9, 10, 11, 12)


@dataclass
class FixpointOptions:
    kernel_certificate: bool = True
    enable_region_rules: bool = True
    max_rounds: int | None = None
    max_paths_per_pair: int = 512
    parallel_pairs: bool = False

    def __post_init__(self):
        if self.kernel_certificate and not self.enable_region_rules:
            raise ValueError(
                "the kernel-size certificate requires the region rules; "
                "disable both or neither"
            )


@dataclass
class FixpointReport:
    events: list[ReductionEvent]
    rounds: int
    final_status: Status
    final_size: tuple[int, int, int]
    rule_fire_counts: dict
    caps_hit: bool = False
    max_rounds_hit: bool = False
    final_instance: AnnotatedInstance | None = None


def rule1(instance: AnnotatedInstance) -> list[ReductionEvent]:
    """Delete every edge joining two zero-demand vertices."""
    d = instance.demand
    events = []
    for u, v in instance.edges():
        if d[u] == 0 and d[v] == 0:
            instance.delete_edge(u, v)
            events.append(ReductionEvent(rule_id=1, removed_edges=frozenset({(u, v)})))
    return events


def rule2(instance: AnnotatedInstance) -> list[ReductionEvent]:
    """Delete every isolated zero-demand vertex, blue or not."""
    events = []
    for v in instance.vertices:
        if instance.demand[v] == 0 and instance.degree(v) == 0:
            instance.delete_vertex(v)
            events.append(ReductionEvent(rule_id=2, removed_vertices=frozenset({v})))
    return events


def rule3(instance: AnnotatedInstance) -> list[ReductionEvent]:
    """Force every vertex whose demand exceeds the budget or its degree.

    Forcing lowers the budget and neighbor demands, which can create new
    violations, so the scan restarts until stable.  Forcing a forbidden
    vertex or overspending decides the instance NO.
    """
    events = []
    changed = True
    while changed and instance.status is Status.OPEN:
        changed = False
        for v in instance.vertices:
            d = instance.demand[v]
            if d > instance.budget or d > instance.degree(v):
                events.append(force_into_solution(instance, v, rule_id=3))
                changed = True
                break
    return events


def rule4(instance: AnnotatedInstance) -> list[ReductionEvent]:
    """Strip redundant edges at zero-demand vertices.

    If some selectable witness ``a`` sees all of ``N(v)``, any solution
    leaning on ``v`` could use ``a`` instead, so the edges from ``v`` to
    demand-1 neighbors, and to ``a`` itself, carry no information.
    """
    events = []
    for v in instance.vertices:
        if not instance.has_vertex(v) or instance.demand[v] != 0:
            continue
        for a in instance.vertices:
            if a == v or not instance.has_vertex(a) or a in instance.forbidden:
                continue
            if not instance.has_vertex(v):
                break
            nv = instance.neighbors(v)
            if not nv <= (instance.neighbors(a) | {a}):
                continue
            doomed = sorted(u for u in nv if instance.demand[u] == 1)
            if a in nv and a not in doomed:
                doomed.append(a)
            if not doomed:
                continue
            removed = []
            for u in doomed:
                instance.delete_edge(v, u)
                removed.append((v, u) if v <= u else (u, v))
            events.append(ReductionEvent(rule_id=4, removed_edges=frozenset(removed)))
    return events


def rule5(instance: AnnotatedInstance) -> list[ReductionEvent]:
    """Force a witness that covers everything a demand-1 vertex could need.

    The witness ``a`` must be selectable and adjacent to ``v``, and every
    other vertex of ``N[v]`` must have demand at most one with all of its
    demanding closed neighborhood inside ``N[a]``; then some solution
    contains ``a``.
    """
    events = []
    restart = True
    while restart and instance.status is Status.OPEN:
        restart = False
        for v in instance.vertices:
            if not instance.has_vertex(v) or instance.demand[v] != 1:
                continue
            for a in sorted(instance.neighbors(v)):
                if a in instance.forbidden:
                    continue
                closed_a = instance.neighbors(a) | {a}
                ok = True
                for u in sorted((instance.neighbors(v) | {v}) - {a}):
                    if instance.demand[u] > 1:
                        ok = False
                        break
                    if not neighborhood(instance, u).high_closed <= closed_a:
                        ok = False
                        break
                if ok:
                    events.append(force_into_solution(instance, a, rule_id=5))
                    restart = True
                    break
            if restart:
                break
    return events


def rule9(instance: AnnotatedInstance) -> list[ReductionEvent]:
    """Color a low-demand vertex blue when a selectable witness dominates its
    demanding closed neighborhood and at most one selectable high-demand
    fallback exists among its other neighbors."""
    events = []
    for v in instance.vertices:
        if v in instance.forbidden or instance.demand[v] > 1:
            continue
        high_closed = neighborhood(instance, v).high_closed
        for w in sorted(instance.neighbors(v)):
            if w in instance.forbidden:
                continue
            if not high_closed <= instance.neighbors(w):
                continue
            fallbacks = [z for z in instance.neighbors(v) if z != w and instance.demand[z] >= 2]
            if len(fallbacks) > 1:
                continue
            if any(z in instance.forbidden for z in fallbacks):
                continue
            instance.color_blue(v)
            events.append(ReductionEvent(rule_id=9, newly_blue=frozenset({v})))
            break
    return events


def rule10(instance: AnnotatedInstance) -> list[ReductionEvent]:
    """Delete edges between blue vertices, then delete blue zero-demand vertices."""
    events = []
    for u, v in instance.edges():
        if u in instance.forbidden and v in instance.forbidden:
            instance.delete_edge(u, v)
            events.append(ReductionEvent(rule_id=10, removed_edges=frozenset({(u, v)})))
    for v in instance.vertices:
        if v in instance.forbidden and instance.demand[v] == 0:
            removed = instance.delete_vertex(v)
            events.append(
                ReductionEvent(
                    rule_id=10,
                    removed_vertices=frozenset({v}),
                    removed_edges=frozenset(removed),
                )
            )
    return events


def rule11(instance: AnnotatedInstance) -> list[ReductionEvent]:
    """Shortcut a demanding blue vertex of degree two whose neighbors are adjacent.

    One of the two neighbors must be selected for the blue vertex's sake,
    so the edge between them is spent either way: drop it and lower both
    demands.  Blue vertices of demand zero are rule 10's business.
    """
    events = []
    for v in instance.vertices:
        if not instance.has_vertex(v):
            continue
        if v not in instance.forbidden or instance.demand[v] < 1:
            continue
        nbrs = sorted(instance.neighbors(v))
        if len(nbrs) != 2:
            continue
        u, w = nbrs
        if not instance.has_edge(u, w):
            continue
        instance.delete_edge(u, w)
        deltas = {}
        for x in (u, w):
            applied = instance.decrement_demand(x)
            if applied:
                deltas[x] = applied
        events.append(
            ReductionEvent(
                rule_id=11,
                removed_edges=frozenset({(u, w) if u <= w else (w, u)}),
                demand_deltas=deltas,
            )
        )
    return events


def rule12(instance: AnnotatedInstance) -> list[ReductionEvent]:
    """Zero the demand of a 1-vertex whose closed neighborhood swallows some
    demanding blue vertex's neighborhood: whatever serves the blue vertex
    serves it too."""
    events = []
    for v in instance.vertices:
        if v not in instance.forbidden or instance.demand[v] < 1:
            continue
        nv = instance.neighbors(v)
        if not nv:
            continue
        for u in instance.vertices:
            if u == v or instance.demand[u] != 1:
                continue
            if nv <= (instance.neighbors(u) | {u}):
                instance.demand[u] = 0
                events.append(ReductionEvent(rule_id=12, demand_deltas={u: -1}))
    return events


def rule13(instance: AnnotatedInstance) -> list[ReductionEvent]:
    """Collapse twin zero-demand vertices of degree two onto one representative.

    Only selectable twins over a selectable neighbor pair participate:
    the justification swaps a deleted twin for the kept one, or for the
    common neighbors, so all of those must be available.
    """
    groups: dict[frozenset[int], list[int]] = {}
    for v in instance.vertices:
        if instance.demand[v] != 0 or v in instance.forbidden:
            continue
        nbrs = instance.neighbors(v)
        if len(nbrs) != 2 or nbrs & instance.forbidden:
            continue
        groups.setdefault(frozenset(nbrs), []).append(v)
    events = []
    for key in sorted(groups, key=sorted):
        twins = sorted(groups[key])
        for v in twins[1:]:
            removed = instance.delete_vertex(v)
            events.append(
                ReductionEvent(
                    rule_id=13,
                    removed_vertices=frozenset({v}),
                    removed_edges=frozenset(removed),
                )
            )
    return events


_LOCAL_RULES = {
    1: rule1,
    2: rule2,
    3: rule3,
    4: rule4,
    5: rule5,
    9: rule9,
    10: rule10,
    11: rule11,
    12: rule12,
    13: rule13,
}


def _region_phase(instance: AnnotatedInstance, options: FixpointOptions) -> tuple[list[ReductionEvent], bool]:
    """Run rules 6-8 over all maximal candidate regions of a fresh embedding.

    Coloring never touches the graph or demands, so one embedding serves
    the whole phase.  Regions are skipped when an anchor or a high-demand
    boundary vertex is forbidden: the coloring arguments replace solution
    vertices with those, so they must remain selectable.
    """
    rs = embed(instance)
    vertices = instance.vertices
    pairs = [
        (a1, a2)
        for i, a1 in enumerate(vertices)
        if a1 not in instance.forbidden
        for a2 in vertices[i + 1 :]
        if a2 not in instance.forbidden
    ]
    caps_hit = False

    def regions_for(pair):
        a1, a2 = pair
        paths, truncated = _typed_paths(instance, a1, a2, options.max_paths_per_pair)
        return _regions_from_paths(instance, rs, a1, a2, paths), truncated

    if options.parallel_pairs and len(pairs) > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor() as pool:
            enumerated = list(pool.map(regions_for, pairs))
    else:
        enumerated = [regions_for(pair) for pair in pairs]

    events: list[ReductionEvent] = []
    for (a1, a2), (regions, truncated) in zip(pairs, enumerated):
        caps_hit |= truncated
        if a1 in instance.forbidden or a2 in instance.forbidden:
            continue
        for region in regions:
            if region.high_boundary & instance.forbidden:
                continue
            events.extend(rule6(instance, region))
            events.extend(rule7(instance, region))
            events.extend(rule8(instance, region))
    return events, caps_hit


def potential(instance: AnnotatedInstance) -> int:
    """Strictly decreasing under every rule event, so it bounds the event count."""
    free = instance.n - len(instance.forbidden)
    return 2 * instance.n + instance.m + instance.total_demand() + free


def run_fixpoint(instance: AnnotatedInstance, options: FixpointOptions | None = None) -> FixpointReport:
    """Reduce the instance until no rule fires, then apply the terminal checks.

    Mutates the instance in place.  Cheap local rules run to exhaustion
    before each region phase.  At quiescence: demand-free instances with
    budget left are YES; and with the certificate enabled, a reduced
    instance bigger than 101 times its remaining budget is NO.
    """
    options = options or FixpointOptions()
    violations = validate(instance)
    if violations:
        raise InvalidInstanceError(violations)
    embed(instance)  # planarity is a precondition; raises NonPlanarError

    events: list[ReductionEvent] = []
    rounds = 0
    caps_hit = False
    max_rounds_hit = False

    while instance.status is Status.OPEN:
        if options.max_rounds is not None and rounds >= options.max_rounds:
            max_rounds_hit = True
            break
        rounds += 1
        fired_this_round = False
        while instance.status is Status.OPEN:
            batch: list[ReductionEvent] = []
            for rid in RULE_PRIORITY:
                batch.extend(_LOCAL_RULES[rid](instance))
                if instance.status is not Status.OPEN:
                    break
            events.extend(batch)
            if not batch:
                break
            fired_this_round = True
        if instance.status is not Status.OPEN:
            break
        if options.enable_region_rules:
            region_events, truncated = _region_phase(instance, options)
            caps_hit |= truncated
            events.extend(region_events)
            if region_events:
                fired_this_round = True
        if not fired_this_round:
            break

    if instance.status is Status.OPEN and not max_rounds_hit:
        if not any(instance.demand.values()) and instance.budget >= 0:
            instance.status = Status.DECIDED_YES
        elif (
            options.kernel_certificate
            and not caps_hit
            and instance.n > KERNEL_FACTOR * instance.budget
        ):
            instance.status = Status.DECIDED_NO
            events.append(
                ReductionEvent(rule_id=KERNEL_BOUND, status_after=Status.DECIDED_NO)
            )

    return FixpointReport(
        events=events,
        rounds=rounds,
        final_status=instance.status,
        final_size=(instance.n, instance.m, instance.budget),
        rule_fire_counts=dict(Counter(ev.rule_id for ev in events)),
        caps_hit=caps_hit,
        max_rounds_hit=max_rounds_hit,
        final_instance=instance,
    )
