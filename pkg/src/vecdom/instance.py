"""Annotated instances of planar vector domination.

An instance is a simple graph with a per-vertex demand, a selection budget,
and a set of forbidden ("blue") vertices that may never enter a solution.
Every reduction rule and both exact solvers operate on this one mutable
class.  Vertex ids are stable: deleting a vertex never renumbers the rest,
so a log of reduction events can be replayed against a copy of the
original instance.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping


class VecdomError(Exception):
    """Base class for errors raised by this package."""


class UnknownVertexError(VecdomError):
    pass


class InvalidInstanceError(VecdomError):
    """Raised when an operation requires a well-formed instance but got violations."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = violations


class Status(enum.Enum):
    OPEN = "open"
    DECIDED_YES = "yes"
    DECIDED_NO = "no"


# rule_id values for events that do not come from a numbered rule
FORCE = "force"
KERNEL_BOUND = "kernel_bound"


@dataclass(frozen=True, eq=False)
class ReductionEvent:
    """One replayable mutation of an instance.

    ``rule_id`` is 1..13 for the numbered rules, or ``FORCE`` /
    ``KERNEL_BOUND`` for the shared forcing primitive and the kernel-size
    certificate.  ``demand_deltas`` records the deltas actually applied,
    after clamping at zero.
    """

    rule_id: int | str
    removed_vertices: frozenset[int] = frozenset()
    removed_edges: frozenset[tuple[int, int]] = frozenset()
    demand_deltas: Mapping[int, int] = field(default_factory=dict)
    budget_delta: int = 0
    newly_blue: frozenset[int] = frozenset()
    status_after: Status | None = None


@dataclass(frozen=True)
class NeighborhoodView:
    """Demand-aware snapshot of one vertex's neighborhood.

    ``high`` holds neighbors with demand >= 1, ``low`` the rest.  The
    closed variants include the center itself regardless of its demand.
    """

    center: int
    open: frozenset[int]
    closed: frozenset[int]
    high: frozenset[int]
    low: frozenset[int]
    high_closed: frozenset[int]


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u <= v else (v, u)


class AnnotatedInstance:
    """Mutable graph + demand vector + budget + forbidden set.

    The constructor is deliberately permissive about demands and
    self-loops so that :func:`validate` can report problems; it only
    refuses edges whose endpoints do not exist, since those cannot be
    represented at all.
    """

    __slots__ = ("_adj", "_m", "demand", "budget", "forbidden", "status")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Iterable[tuple[int, int]] = (),
        demand: Mapping[int, int] | None = None,
        budget: int = 0,
        forbidden: Iterable[int] = (),
        status: Status = Status.OPEN,
    ):
        self._adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        self._m = 0
        for u, v in edges:
            if u not in self._adj or v not in self._adj:
                raise UnknownVertexError(f"edge ({u}, {v}) references a missing vertex")
            self._add_edge(u, v)
        self.demand: dict[int, int] = {v: 0 for v in self._adj}
        for v, d in (demand or {}).items():
            if v not in self._adj:
                raise UnknownVertexError(f"demand given for missing vertex {v}")
            self.demand[v] = int(d)
        self.budget = int(budget)
        self.forbidden: set[int] = set(forbidden)
        self.status = status

    # -- read access ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> list[int]:
        return sorted(self._adj)

    def vertex_set(self):
        return self._adj.keys()

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: int) -> set[int]:
        """The live adjacency set of ``v``; treat as read-only."""
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, nbrs in self._adj.items():
            for v in nbrs:
                if u <= v:
                    out.append((u, v))
        return sorted(out)

    def total_demand(self) -> int:
        return sum(self.demand.values())

    # -- mutation ------------------------------------------------------

    def _add_edge(self, u: int, v: int) -> None:
        if u == v:
            if u not in self._adj[u]:
                self._adj[u].add(u)
                self._m += 1
            return
        if v not in self._adj[u]:
            self._adj[u].add(v)
            self._adj[v].add(u)
            self._m += 1

    def delete_edge(self, u: int, v: int) -> None:
        if not self.has_edge(u, v):
            raise UnknownVertexError(f"edge ({u}, {v}) not present")
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self._m -= 1

    def delete_vertex(self, v: int) -> list[tuple[int, int]]:
        """Remove ``v`` with its incident edges; returns the edges removed."""
        nbrs = sorted(self.neighbors(v))
        removed = [_edge(v, u) for u in nbrs]
        for u in nbrs:
            if u != v:
                self._adj[u].discard(v)
        self._m -= len(removed)
        del self._adj[v]
        del self.demand[v]
        self.forbidden.discard(v)
        return removed

    def decrement_demand(self, v: int) -> int:
        """Lower the demand of ``v`` by one, clamped at zero; returns the applied delta."""
        if self.demand[v] > 0:
            self.demand[v] -= 1
            return -1
        return 0

    def color_blue(self, v: int) -> None:
        if v not in self._adj:
            raise UnknownVertexError(f"unknown vertex {v}")
        self.forbidden.add(v)

    # -- plumbing ------------------------------------------------------

    def copy(self) -> "AnnotatedInstance":
        dup = AnnotatedInstance.__new__(AnnotatedInstance)
        dup._adj = {v: set(nbrs) for v, nbrs in self._adj.items()}
        dup._m = self._m
        dup.demand = dict(self.demand)
        dup.budget = self.budget
        dup.forbidden = set(self.forbidden)
        dup.status = self.status
        return dup

    def __eq__(self, other) -> bool:
        if not isinstance(other, AnnotatedInstance):
            return NotImplemented
        return (
            self._adj == other._adj
            and self.demand == other.demand
            and self.budget == other.budget
            and self.forbidden == other.forbidden
            and self.status == other.status
        )

    __hash__ = None  # mutable

    def __repr__(self) -> str:
        return (
            f"AnnotatedInstance(n={self.n}, m={self.m}, k={self.budget}, "
            f"blue={len(self.forbidden)}, status={self.status.value})"
        )


def validate(instance: AnnotatedInstance, *, construction: bool = False) -> list[str]:
    """Return a list of invariant violations, empty when the instance is well formed.

    With ``construction=True`` the demand ceiling ``d(v) <= n - 1`` is also
    enforced; that bound only holds for freshly built instances, since
    deletions may shrink ``n`` under a fixed demand.
    """
    out = []
    adj = instance._adj
    for v, nbrs in adj.items():
        if v in nbrs:
            out.append(f"self-loop at {v}")
        for u in nbrs:
            if u not in adj:
                out.append(f"edge ({v}, {u}) references missing vertex {u}")
            elif u != v and v not in adj[u]:
                out.append(f"asymmetric adjacency between {v} and {u}")
    n = instance.n
    if n >= 3 and instance.m > 3 * n - 6:
        out.append(f"m > 3n-6: {instance.m} edges exceeds planar bound {3 * n - 6}")
    for v, d in instance.demand.items():
        if d < 0:
            out.append(f"negative demand at {v}")
        elif construction and d > n - 1:
            out.append(f"demand {d} at {v} exceeds n-1 = {n - 1}")
    for v in instance.forbidden:
        if v not in adj:
            out.append(f"forbidden vertex {v} is not in the graph")
    if instance.status is Status.DECIDED_YES:
        if any(instance.demand.values()) or instance.budget < 0:
            out.append("status is yes but demands remain or budget is negative")
    return out


def dominates(instance: AnnotatedInstance, chosen: Iterable[int], targets: Iterable[int]) -> bool:
    """True when every target outside ``chosen`` has at least its demand in ``chosen``.

    Members of ``chosen`` are satisfied by convention: the problem only
    constrains vertices outside the solution.
    """
    chosen = set(chosen)
    adj = instance._adj
    for v in chosen:
        if v not in adj:
            raise UnknownVertexError(f"unknown vertex {v}")
    for v in targets:
        if v not in adj:
            raise UnknownVertexError(f"unknown vertex {v}")
        if v in chosen:
            continue
        need = instance.demand[v]
        if need and len(adj[v] & chosen) < need:
            return False
    return True


def neighborhood(instance: AnnotatedInstance, v: int) -> NeighborhoodView:
    """Compute the demand-split neighborhood of ``v`` from the current state."""
    nbrs = instance.neighbors(v)
    high = frozenset(u for u in nbrs if instance.demand[u] >= 1)
    low = frozenset(nbrs) - high
    return NeighborhoodView(
        center=v,
        open=frozenset(nbrs),
        closed=frozenset(nbrs) | {v},
        high=high,
        low=low,
        high_closed=high | {v},
    )


def force_into_solution(instance: AnnotatedInstance, v: int, rule_id: int | str = FORCE) -> ReductionEvent:
    """Commit ``v`` to the solution: delete it, relax its neighbors, spend budget.

    Forcing a forbidden vertex, or spending the budget below zero, decides
    the instance NO; the decision is recorded on the returned event.
    """
    if not instance.has_vertex(v):
        raise UnknownVertexError(f"unknown vertex {v}")
    was_forbidden = v in instance.forbidden
    nbrs = sorted(u for u in instance.neighbors(v) if u != v)
    removed = instance.delete_vertex(v)
    deltas = {}
    for u in nbrs:
        applied = instance.decrement_demand(u)
        if applied:
            deltas[u] = applied
    instance.budget -= 1
    status_after = None
    if instance.status is Status.OPEN and (was_forbidden or instance.budget < 0):
        instance.status = Status.DECIDED_NO
        status_after = Status.DECIDED_NO
    return ReductionEvent(
        rule_id=rule_id,
        removed_vertices=frozenset({v}),
        removed_edges=frozenset(removed),
        demand_deltas=deltas,
        budget_delta=-1,
        status_after=status_after,
    )


def replay(instance: AnnotatedInstance, events: Iterable[ReductionEvent]) -> AnnotatedInstance:
    """Apply recorded events to ``instance`` in order, mutating and returning it."""
    for ev in events:
        for u, v in sorted(ev.removed_edges):
            if instance.has_edge(u, v):
                instance.delete_edge(u, v)
        for v in sorted(ev.removed_vertices):
            if instance.has_vertex(v):
                instance.delete_vertex(v)
        for v, delta in sorted(ev.demand_deltas.items()):
            instance.demand[v] = max(0, instance.demand[v] + delta)
        instance.budget += ev.budget_delta
        for v in ev.newly_blue:
            instance.color_blue(v)
        if ev.status_after is not None:
            instance.status = ev.status_after
    return instance
