"""Instance files, random planar generators, demand profiles, kernel stats.

The file format is line oriented: one ``p pvds <n> <m> <k>`` header, then
optional ``d <v> <demand>``, ``f <v>`` and ``e <u> <v>`` lines with
1-indexed vertices.  ``write`` emits a canonical form (sorted lines, zero
demands omitted) so that round-trips are byte stable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .instance import AnnotatedInstance, Status, VecdomError, validate
from .planarity import embed
from .regions import enumerate_candidate_regions
from .rules import FixpointReport


class ParseError(VecdomError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


def parse(text: str) -> AnnotatedInstance:
    """Parse an instance file; demands default to zero, vertices to isolated."""
    n = m = k = None
    demands: dict[int, int] = {}
    forbidden: set[int] = set()
    edges: list[tuple[int, int]] = []
    edge_seen: set[tuple[int, int]] = set()

    def vertex(tok: str, ln: int) -> int:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(f"bad vertex id {tok!r}", ln) from None
        if not 1 <= v <= n:
            raise ParseError(f"vertex {v} out of range 1..{n}", ln)
        return v - 1

    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate header", ln)
            if len(parts) != 5 or parts[1] != "pvds":
                raise ParseError("header must be 'p pvds <n> <m> <k>'", ln)
            try:
                n, m, k = int(parts[2]), int(parts[3]), int(parts[4])
            except ValueError:
                raise ParseError("header counts must be integers", ln) from None
            if n < 0 or m < 0:
                raise ParseError("negative counts in header", ln)
            continue
        if n is None:
            raise ParseError("data line before header", ln)
        if parts[0] == "d":
            if len(parts) != 3:
                raise ParseError("demand line must be 'd <v> <demand>'", ln)
            v = vertex(parts[1], ln)
            if v in demands:
                raise ParseError(f"duplicate demand for vertex {v + 1}", ln)
            try:
                d = int(parts[2])
            except ValueError:
                raise ParseError("demand must be an integer", ln) from None
            if d < 0:
                raise ParseError("negative demand", ln)
            demands[v] = d
        elif parts[0] == "f":
            if len(parts) != 2:
                raise ParseError("forbidden line must be 'f <v>'", ln)
            v = vertex(parts[1], ln)
            if v in forbidden:
                raise ParseError(f"duplicate forbidden line for vertex {v + 1}", ln)
            forbidden.add(v)
        elif parts[0] == "e":
            if len(parts) != 3:
                raise ParseError("edge line must be 'e <u> <v>'", ln)
            u, v = vertex(parts[1], ln), vertex(parts[2], ln)
            if u == v:
                raise ParseError("self-loops are not allowed", ln)
            key = (u, v) if u < v else (v, u)
            if key in edge_seen:
                raise ParseError(f"duplicate edge {u + 1} {v + 1}", ln)
            edge_seen.add(key)
            edges.append(key)
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", ln)

    if n is None:
        raise ParseError("missing 'p pvds' header")
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges but file has {len(edges)}")
    instance = AnnotatedInstance(range(n), edges, demands, budget=k, forbidden=forbidden)
    bad = validate(instance)
    if bad:
        raise ParseError("; ".join(bad))
    return instance


def write(instance: AnnotatedInstance) -> str:
    """Serialize to the canonical form.

    Vertices are relabeled 1..n in sorted-id order, so freshly parsed or
    generated instances (dense ids) round-trip field for field, and
    reduced instances with deleted ids come out compact.
    """
    ids = instance.vertices
    label = {v: i + 1 for i, v in enumerate(ids)}
    lines = [f"p pvds {instance.n} {instance.m} {instance.budget}"]
    for v in ids:
        if instance.demand[v]:
            lines.append(f"d {label[v]} {instance.demand[v]}")
    for v in sorted(instance.forbidden):
        lines.append(f"f {label[v]}")
    for u, v in sorted((label[a], label[b]) for a, b in instance.edges()):
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def trivial_instance(answer: bool) -> AnnotatedInstance:
    """A canonical miniature instance equivalent to a decided answer."""
    if answer:
        return AnnotatedInstance([], budget=0, status=Status.DECIDED_YES)
    return AnnotatedInstance(
        [0, 1], [(0, 1)], demand={0: 1}, budget=0, status=Status.DECIDED_NO
    )


def generate_planar(n: int, edge_density: float, seed: int) -> AnnotatedInstance:
    """Random planar graph: grow a triangulation by face splits, then thin it.

    Starting from a triangle, each new vertex is dropped into a random
    face and wired to its three corners; afterwards every edge survives
    independently with probability ``edge_density``.  Demands start at
    zero and the budget at zero; same seed, same graph.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0 <= edge_density <= 1:
        raise ValueError("edge_density must lie in [0, 1]")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    if n == 2:
        edges = [(0, 1)]
    elif n >= 3:
        edges = [(0, 1), (0, 2), (1, 2)]
        faces = [(0, 1, 2)]
        for w in range(3, n):
            a, b, c = faces.pop(rng.randrange(len(faces)))
            edges += [(a, w), (b, w), (c, w)]
            faces += [(a, b, w), (b, c, w), (a, c, w)]
    kept = [e for e in sorted(edges) if rng.random() < edge_density]
    return AnnotatedInstance(range(n), kept)


def _parse_profile(profile: str):
    name, _, arg = profile.partition(":")
    name = name.strip().lower()
    if name == "r":
        r = int(arg)
        if r < 0:
            raise ValueError("uniform demand must be non-negative")
        return ("r", r)
    if name == "alpha":
        alpha = Fraction(arg.strip())
        if not 0 < alpha <= 1:
            raise ValueError("alpha must lie in (0, 1]")
        return ("alpha", alpha)
    if name == "bdvd":
        t = int(arg)
        if t < 0:
            raise ValueError("target degree must be non-negative")
        return ("bdvd", t)
    if name == "pids":
        if arg:
            raise ValueError("pids takes no argument")
        return ("alpha", Fraction(1, 2))
    if name == "random":
        max_d = int(arg)
        if max_d < 0:
            raise ValueError("maximum demand must be non-negative")
        return ("random", max_d)
    raise ValueError(f"unknown profile {profile!r}")


def make_special_case(
    instance: AnnotatedInstance, profile: str, seed: int | None = None
) -> AnnotatedInstance:
    """Assign demands from a named profile, returning a new instance.

    Profiles: ``r:<r>`` uniform demand r; ``alpha:<x>`` demand
    ceil(x * degree); ``pids`` the alpha=1/2 case; ``bdvd:<t>`` demand
    max(0, degree - t), so deleting the solution leaves every survivor
    with at most ``t`` neighbors; ``random:<max>`` independent uniform
    demands in 0..max.
    """
    kind, *args = _parse_profile(profile)
    out = instance.copy()
    if kind == "r":
        (r,) = args
        for v in out.vertices:
            out.demand[v] = r
    elif kind == "alpha":
        (alpha,) = args
        for v in out.vertices:
            deg = out.degree(v)
            out.demand[v] = -((-alpha.numerator * deg) // alpha.denominator)
    elif kind == "bdvd":
        (t,) = args
        for v in out.vertices:
            out.demand[v] = max(0, out.degree(v) - t)
    elif kind == "random":
        (max_d,) = args
        rng = random.Random(seed)
        for v in out.vertices:
            out.demand[v] = rng.randint(0, max_d)
    return out


@dataclass(frozen=True)
class KernelStats:
    n_before: int
    m_before: int
    n_after: int
    m_after: int
    k_before: int
    k_after: int
    blue_count: int
    rule_fire_counts: dict
    region_count_examined: int
    max_region_interior: int
    bound_ratio: float
    status: Status


def kernel_report(
    instance: AnnotatedInstance, report: FixpointReport, max_paths_per_pair: int = 512
) -> KernelStats:
    """Summarize a completed fixpoint run.

    ``instance`` is the original; the reduced instance is taken from the
    report.  The largest candidate-region interior is recomputed on the
    final graph by full enumeration over all anchor pairs.
    """
    final = report.final_instance
    region_count = 0
    max_interior = 0
    if final.n:
        rs = embed(final)
        ids = final.vertices
        for i, a1 in enumerate(ids):
            for a2 in ids[i + 1 :]:
                regions = enumerate_candidate_regions(final, rs, a1, a2, max_paths_per_pair)
                region_count += len(regions)
                for region in regions:
                    max_interior = max(max_interior, len(region.interior))
    return KernelStats(
        n_before=instance.n,
        m_before=instance.m,
        n_after=final.n,
        m_after=final.m,
        k_before=instance.budget,
        k_after=final.budget,
        blue_count=len(final.forbidden),
        rule_fire_counts=dict(report.rule_fire_counts),
        region_count_examined=region_count,
        max_region_interior=max_interior,
        bound_ratio=final.n / max(final.budget, 1),
        status=report.final_status,
    )


def format_stats(stats: KernelStats) -> str:
    """One deterministic, machine-grepable line per kernelization run."""
    fires = ",".join(
        f"{rid}:{count}"
        for rid, count in sorted(stats.rule_fire_counts.items(), key=lambda kv: str(kv[0]))
    )
    return (
        f"n_before={stats.n_before} m_before={stats.m_before} "
        f"n_after={stats.n_after} m_after={stats.m_after} "
        f"k_before={stats.k_before} k_after={stats.k_after} "
        f"blue={stats.blue_count} regions={stats.region_count_examined} "
        f"max_region_interior={stats.max_region_interior} "
        f"bound_ratio={stats.bound_ratio:.4f} status={stats.status.value} "
        f"rules={fires or '-'}"
    )
