"""File format, generators, demand profiles, kernel statistics."""

import pytest
from hypothesis import given, settings, strategies as st

from vecdom import (
    FixpointOptions,
    ParseError,
    Status,
    embed,
    generate_planar,
    kernel_report,
    make_special_case,
    parse,
    run_fixpoint,
    solve_bb,
    solve_brute,
    trivial_instance,
    write,
)

from conftest import build, worst_case_region_instance


class TestParse:
    def test_minimal_file(self):
        inst = parse("p pvds 2 1 1\ne 1 2\nd 2 1\n")
        assert inst.n == 2 and inst.m == 1 and inst.budget == 1
        assert inst.demand == {0: 0, 1: 1}

    def test_header_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            parse("p pvds 3 3 0\ne 1 2\ne 2 3\n")

    def test_forbidden_line(self):
        inst = parse("p pvds 2 1 0\ne 1 2\nf 1\n")
        assert inst.forbidden == {0}

    def test_comments_and_blank_lines_ignored(self):
        inst = parse("c hello\n\np pvds 1 0 2\nc bye\n")
        assert inst.n == 1 and inst.budget == 2

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ParseError):
            parse("p pvds 2 2 0\ne 1 2\ne 2 1\n")

    def test_self_loop_rejected(self):
        with pytest.raises(ParseError) as err:
            parse("p pvds 2 1 0\ne 1 1\n")
        assert err.value.line == 2

    def test_out_of_range_vertex(self):
        with pytest.raises(ParseError):
            parse("p pvds 2 1 0\ne 1 5\n")

    def test_data_before_header(self):
        with pytest.raises(ParseError):
            parse("e 1 2\np pvds 2 1 0\n")


class TestWrite:
    def test_empty_instance(self):
        assert write(build(0)) == "p pvds 0 0 0\n"

    def test_canonical_ordering(self):
        inst = build(3, [(1, 2), (0, 2)], {2: 2}, k=1, forbidden=[1])
        assert write(inst) == "p pvds 3 2 1\nd 3 2\nf 2\ne 1 3\ne 2 3\n"

    def test_round_trip_field_for_field(self):
        inst = parse("p pvds 4 3 2\nd 1 1\nd 4 2\nf 2\ne 1 2\ne 2 3\ne 3 4\n")
        assert parse(write(inst)) == inst

    def test_write_parse_write_byte_stable(self):
        text = "c scrambled\np pvds 4 2 1\ne 3 4\nd 2 1\ne 1 2\n"
        canonical = write(parse(text))
        assert write(parse(canonical)) == canonical

    def test_reduced_instance_renumbers_compactly(self):
        inst = build(4, [(0, 1), (2, 3)], {1: 1, 3: 1}, k=2)
        inst.delete_vertex(2)
        text = write(inst)
        reparsed = parse(text)
        assert reparsed.n == 3
        assert solve_brute(reparsed).answer == solve_brute(inst).answer

    @given(st.integers(0, 5000))
    @settings(max_examples=80, deadline=None)
    def test_generated_instances_round_trip(self, seed):
        inst = make_special_case(generate_planar(3 + seed % 12, 0.8, seed), "random:3", seed=seed)
        inst.budget = seed % 5
        text = write(inst)
        assert parse(text) == inst
        assert write(parse(text)) == text


class TestGeneratePlanar:
    def test_full_density_three_is_triangle(self):
        inst = generate_planar(3, 1.0, seed=0)
        assert inst.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_always_embeddable(self):
        for seed in range(30):
            embed(generate_planar(5 + seed % 20, (seed % 10) / 10, seed))

    def test_seed_determinism(self):
        a = generate_planar(50, 0.7, seed=123)
        b = generate_planar(50, 0.7, seed=123)
        assert a.edges() == b.edges()

    def test_triangulation_has_maximal_edges(self):
        inst = generate_planar(40, 1.0, seed=9)
        assert inst.m == 3 * 40 - 6

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            generate_planar(0, 0.5, 1)
        with pytest.raises(ValueError):
            generate_planar(5, 1.5, 1)


class TestMakeSpecialCase:
    def test_uniform_demand(self):
        inst = make_special_case(build(3, [(0, 1), (1, 2), (0, 2)]), "r:1")
        assert inst.demand == {0: 1, 1: 1, 2: 1}

    def test_degree_slack_star(self):
        star = build(5, [(0, v) for v in range(1, 5)])
        inst = make_special_case(star, "bdvd:2")
        assert inst.demand[0] == 2
        assert all(inst.demand[v] == 0 for v in range(1, 5))

    def test_pids_on_four_cycle(self):
        inst = make_special_case(build(4, [(0, 1), (1, 2), (2, 3), (3, 0)]), "pids")
        assert all(d == 1 for d in inst.demand.values())

    def test_alpha_ceiling_avoids_float_drift(self):
        wheel = build(11, [(0, v) for v in range(1, 11)])
        inst = make_special_case(wheel, "alpha:0.1")
        assert inst.demand[0] == 1  # ceil(0.1 * 10) == 1 exactly

    def test_alpha_bounds(self):
        triangle = build(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(ValueError):
            make_special_case(triangle, "alpha:0")
        with pytest.raises(ValueError):
            make_special_case(triangle, "alpha:1.5")

    def test_negative_parameters_rejected(self):
        triangle = build(3, [(0, 1), (1, 2), (0, 2)])
        for profile in ("r:-1", "bdvd:-2", "random:-1"):
            with pytest.raises(ValueError):
                make_special_case(triangle, profile)

    def test_random_profile_seeded(self):
        base = generate_planar(12, 0.8, 4)
        one = make_special_case(base, "random:3", seed=11)
        two = make_special_case(base, "random:3", seed=11)
        assert one.demand == two.demand

    def test_original_untouched(self):
        base = build(3, [(0, 1), (1, 2), (0, 2)])
        make_special_case(base, "r:2")
        assert all(d == 0 for d in base.demand.values())


class TestKernelReport:
    def test_worst_case_region_measures_fifteen(self):
        inst = worst_case_region_instance()
        # enumerate on the construction itself: a zero-round report leaves
        # the instance unreduced
        report = run_fixpoint(
            inst.copy(),
            FixpointOptions(kernel_certificate=False, enable_region_rules=False, max_rounds=0),
        )
        stats = kernel_report(inst, report)
        assert stats.max_region_interior == 15

    def test_worst_case_stays_within_region_ceiling_after_reduction(self):
        inst = worst_case_region_instance()
        reduced = inst.copy()
        report = run_fixpoint(reduced)
        stats = kernel_report(inst, report)
        assert stats.max_region_interior <= 15
        assert stats.n_before == 23
        assert stats.n_after == reduced.n
        assert stats.blue_count == len(reduced.forbidden)

    def test_all_zero_demand_reduces_to_nothing(self):
        inst = generate_planar(9, 0.9, 2)
        inst.budget = 1
        report = run_fixpoint(inst.copy())
        stats = kernel_report(inst, report)
        assert stats.n_after == 0
        assert stats.status is Status.DECIDED_YES

    def test_bound_ratio_uses_reduced_budget(self):
        inst = build(3, [(0, 1), (1, 2), (0, 2)], {0: 1, 1: 1, 2: 1}, k=2)
        report = run_fixpoint(inst.copy())
        stats = kernel_report(inst, report)
        assert stats.bound_ratio == stats.n_after / max(stats.k_after, 1)


class TestTrivialInstances:
    def test_yes_round_trip(self):
        text = write(trivial_instance(True))
        assert text == "p pvds 0 0 0\n"
        assert solve_brute(parse(text)).answer

    def test_no_round_trip(self):
        inst = parse(write(trivial_instance(False)))
        assert not solve_brute(inst).answer
        assert not solve_bb(inst).answer
