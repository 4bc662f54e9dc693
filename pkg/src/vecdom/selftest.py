"""Randomized soundness harness.

Builds small planar instances, runs the reduction engine, and checks every
single event against the exhaustive oracle: replaying the event log one
step at a time must never change the instance's answer.  Also
cross-validates the branch-and-bound solver and the end-to-end kernel
pipeline.  The CLI ``selftest`` subcommand and the acceptance tests both
run on top of this module.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .instance import AnnotatedInstance, Status, replay
from .rules import FixpointOptions, FixpointReport, potential, run_fixpoint
from .solver import solve_bb, solve_brute
from .toolkit import generate_planar, make_special_case

# Profile mix used for generated corpora; covers the uniform, ceiling,
# degree-slack and random demand families.
CORPUS_PROFILES = ("random:2", "r:1", "bdvd:1", "pids", "random:3", "r:2", "bdvd:2")


def corpus_instance(seed: int, max_n: int = 14) -> AnnotatedInstance:
    """Deterministic small planar instance for soundness sweeps."""
    span = max_n - 3
    n = 4 + seed % span if span > 0 else max_n
    density = 0.55 + 0.1 * ((seed // 7) % 5)
    base = generate_planar(n, density, seed)
    inst = make_special_case(base, CORPUS_PROFILES[seed % len(CORPUS_PROFILES)], seed=seed)
    inst.budget = seed % 4
    return inst


def oracle_answer(instance: AnnotatedInstance, oracle_limit: int = 18) -> bool:
    """Status-aware exhaustive answer; decided instances keep their decision."""
    if instance.status is Status.DECIDED_YES:
        return True
    if instance.status is Status.DECIDED_NO:
        return False
    return solve_brute(instance, oracle_limit).answer


@dataclass
class InstanceRecord:
    """Everything the checks learned about one corpus instance."""

    seed: int
    instance: AnnotatedInstance
    brute_answer: bool
    report_on: FixpointReport
    report_off: FixpointReport
    phi_initial: int
    event_failures: list[str] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)


def _check_event_chain(record: InstanceRecord, oracle_limit: int) -> None:
    """Replay the region-rules-on event log step by step against the oracle."""
    working = record.instance.copy()
    expected = record.brute_answer
    for idx, event in enumerate(record.report_on.events):
        replay(working, [event])
        got = oracle_answer(working, oracle_limit)
        if got != expected:
            record.event_failures.append(
                f"event {idx} (rule {event.rule_id}) flipped the answer "
                f"from {expected} to {got}"
            )
            return


def evaluate_instance(seed: int, oracle_limit: int = 18, max_n: int = 14) -> InstanceRecord:
    """Run the full battery of checks on one generated instance."""
    original = corpus_instance(seed, max_n)
    brute = solve_brute(original, oracle_limit).answer

    on = original.copy()
    report_on = run_fixpoint(on, FixpointOptions())
    off = original.copy()
    report_off = run_fixpoint(
        off, FixpointOptions(kernel_certificate=False, enable_region_rules=False)
    )

    record = InstanceRecord(
        seed=seed,
        instance=original,
        brute_answer=brute,
        report_on=report_on,
        report_off=report_off,
        phi_initial=potential(original),
    )

    _check_event_chain(record, oracle_limit)

    for label, report in (("on", report_on), ("off", report_off)):
        final = report.final_instance
        if report.final_status is Status.OPEN:
            got = solve_bb(final).answer
        else:
            got = report.final_status is Status.DECIDED_YES
        if got != brute:
            record.failures.append(
                f"kernel answer with region rules {label} is {got}, oracle says {brute}"
            )

    if len(report_on.events) > record.phi_initial:
        record.failures.append(
            f"{len(report_on.events)} events exceed the potential {record.phi_initial}"
        )
    if report_on.max_rounds_hit or report_off.max_rounds_hit:
        record.failures.append("fixpoint hit the round cap")

    replayed = replay(original.copy(), report_on.events)
    replayed.status = report_on.final_status
    if replayed != report_on.final_instance:
        record.failures.append("replaying the event log did not reproduce the kernel")

    if solve_bb(original).answer != brute:
        record.failures.append("branch-and-bound disagrees with the oracle")

    return record


def run_selftest(
    count: int = 200,
    seed0: int = 0,
    oracle_limit: int = 18,
    threads: int | None = None,
    progress=None,
) -> tuple[int, list[str]]:
    """Check ``count`` seeded instances, one worker thread per instance.

    Returns the number of instances checked and a list of failure
    descriptions (empty on success).
    """
    from concurrent.futures import ThreadPoolExecutor

    seeds = range(seed0, seed0 + count)
    failures: list[str] = []

    def work(seed: int) -> list[str]:
        record = evaluate_instance(seed, oracle_limit)
        return [f"seed {seed}: {msg}" for msg in record.event_failures + record.failures]

    with ThreadPoolExecutor(max_workers=threads) as pool:
        for i, msgs in enumerate(pool.map(work, seeds)):
            failures.extend(msgs)
            if progress and (i + 1) % 50 == 0:
                progress(i + 1)
    return count, failures
