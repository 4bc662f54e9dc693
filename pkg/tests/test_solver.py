"""Exact solvers: brute-force oracle, branch and bound, witness checking."""

import pytest
from hypothesis import given, settings, strategies as st

from vecdom import (
    NodeBudgetError,
    OracleLimitError,
    solve_bb,
    solve_brute,
    verify_solution,
)
from vecdom.toolkit import generate_planar, make_special_case

from conftest import build


class TestSolveBrute:
    def test_k4_uniform_demand_single_pick(self):
        inst = build(4, [(u, v) for u in range(4) for v in range(u + 1, 4)],
                     {v: 1 for v in range(4)}, k=1)
        result = solve_brute(inst)
        assert result.answer
        assert len(result.witness) == 1

    def test_member_convention_single_vertex(self):
        inst = build(1, demand={0: 1}, k=1)
        result = solve_brute(inst)
        assert result.answer
        assert result.witness == {0}

    def test_zero_budget_demanding_vertex(self):
        inst = build(1, demand={0: 1}, k=0)
        assert not solve_brute(inst).answer

    def test_negative_budget_is_no(self):
        inst = build(1, k=-1)
        assert not solve_brute(inst).answer

    def test_forbidden_vertices_excluded(self):
        inst = build(2, [(0, 1)], {1: 1}, k=2, forbidden=[0, 1])
        assert not solve_brute(inst).answer

    def test_oracle_limit(self):
        with pytest.raises(OracleLimitError):
            solve_brute(build(19), oracle_limit=18)

    def test_deterministic_witness(self):
        inst = make_special_case(generate_planar(10, 0.8, 5), "random:2", seed=5)
        inst.budget = 3
        first, second = solve_brute(inst), solve_brute(inst)
        assert (first.answer, first.witness, first.nodes_explored) == (
            second.answer, second.witness, second.nodes_explored)


class TestSolveBB:
    def test_all_zero_demand_one_node(self):
        inst = build(6, [(0, 1), (2, 3)], k=0)
        result = solve_bb(inst)
        assert result.answer
        assert result.witness == frozenset()
        assert result.nodes_explored == 1

    def test_unsatisfiable_forbidden_vertex(self):
        inst = build(2, [(0, 1)], {0: 2}, k=2, forbidden=[0])
        assert not solve_bb(inst).answer

    def test_node_budget_enforced(self):
        inst = make_special_case(generate_planar(12, 0.9, 2), "r:2")
        inst.budget = 3
        with pytest.raises(NodeBudgetError):
            solve_bb(inst, node_budget=1)

    def test_witness_always_valid(self):
        for seed in range(40):
            inst = make_special_case(generate_planar(9, 0.75, seed), "random:2", seed=seed)
            inst.budget = seed % 4
            result = solve_bb(inst)
            if result.answer:
                assert verify_solution(inst, result.witness)

    @given(st.integers(0, 2000))
    @settings(max_examples=150, deadline=None)
    def test_agrees_with_oracle(self, seed):
        profile = ("random:2", "r:1", "bdvd:1", "pids")[seed % 4]
        inst = make_special_case(generate_planar(4 + seed % 9, 0.7, seed), profile, seed=seed)
        inst.budget = seed % 4
        assert solve_bb(inst).answer == solve_brute(inst).answer

    @given(st.integers(0, 2000))
    @settings(max_examples=40, deadline=None)
    def test_agrees_with_oracle_under_forbidden_sets(self, seed):
        inst = make_special_case(generate_planar(4 + seed % 8, 0.8, seed), "random:2", seed=seed)
        inst.budget = seed % 4
        inst.forbidden = {v for v in inst.vertices if (v + seed) % 3 == 0}
        assert solve_bb(inst).answer == solve_brute(inst).answer


class TestVerifySolution:
    def test_bb_witness_verifies(self):
        inst = build(4, [(0, 1), (1, 2), (2, 3)], {0: 1, 1: 1, 2: 1, 3: 1}, k=2)
        result = solve_bb(inst)
        assert result.answer
        assert verify_solution(inst, result.witness)

    def test_forbidden_member_rejected(self):
        inst = build(2, [(0, 1)], {1: 1}, k=2, forbidden=[0])
        assert not verify_solution(inst, {0})

    def test_oversized_set_rejected(self):
        inst = build(3, [(0, 1), (1, 2)], k=1)
        assert not verify_solution(inst, {0, 2})

    def test_undersized_coverage_rejected(self):
        inst = build(3, [(0, 1), (1, 2)], {1: 2}, k=1)
        assert not verify_solution(inst, {0})
