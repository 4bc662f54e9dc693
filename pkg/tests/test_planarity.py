"""Embeddings: planarity certification, face traversal, cycle sides."""

import pytest
from hypothesis import given, settings, strategies as st

from vecdom import NonPlanarError, NotACycleError, cycle_sides, embed, faces
from vecdom.toolkit import generate_planar

from conftest import build


def complete(n):
    return build(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


class TestEmbed:
    def test_k4_has_four_faces(self):
        rs = embed(complete(4))
        assert len(rs.faces) == 4
        assert rs.face_count == 4

    def test_k5_refused(self):
        with pytest.raises(NonPlanarError) as err:
            embed(complete(5))
        assert err.value.witness_edges

    def test_six_cycle_two_faces(self):
        rs = embed(build(6, [(i, (i + 1) % 6) for i in range(6)]))
        assert rs.face_count == 2

    def test_deterministic(self):
        inst = generate_planar(30, 0.8, seed=7)
        assert embed(inst).rotation == embed(inst).rotation

    def test_k33_refused(self):
        inst = build(6, [(u, v) for u in (0, 1, 2) for v in (3, 4, 5)])
        with pytest.raises(NonPlanarError):
            embed(inst)


class TestFaces:
    def test_single_edge_one_face_length_two(self):
        rs = embed(build(2, [(0, 1)]))
        fs = faces(rs)
        assert len(fs) == 1
        assert len(fs[0]) == 2

    def test_triangle_two_faces_length_three(self):
        rs = embed(build(3, [(0, 1), (1, 2), (0, 2)]))
        fs = faces(rs)
        assert sorted(len(f) for f in fs) == [3, 3]

    def test_two_triangles_sharing_an_edge(self):
        # Euler: 4 - 5 + F = 2 so F = 3
        rs = embed(build(4, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)]))
        assert len(faces(rs)) == 3

    def test_every_dart_in_exactly_one_face(self):
        inst = generate_planar(25, 0.7, seed=3)
        rs = embed(inst)
        darts = [d for f in faces(rs) for d in f]
        assert len(darts) == len(set(darts)) == 2 * inst.m

    @given(st.integers(0, 400))
    @settings(max_examples=50, deadline=None)
    def test_euler_formula_merged(self, seed):
        inst = generate_planar(4 + seed % 12, 0.5 + (seed % 5) * 0.125, seed)
        rs = embed(inst)
        components = len(set(rs.component_of.values()))
        assert inst.n - inst.m + rs.face_count == 1 + components


class TestCycleSides:
    def test_triangle_hanging_inside_hexagon(self):
        edges = [(i, (i + 1) % 6) for i in range(6)]
        edges += [(6, 7), (7, 8), (6, 8), (0, 6)]
        inst = build(9, edges)
        sides = cycle_sides(embed(inst), [0, 1, 2, 3, 4, 5])
        counts = sorted(len(s.inside) for s in sides)
        assert counts == [0, 3]
        big = max(sides, key=lambda s: len(s.inside))
        assert big.inside == {6, 7, 8}

    def test_detached_triangle_lands_on_outer_side(self):
        edges = [(i, (i + 1) % 6) for i in range(6)] + [(6, 7), (7, 8), (6, 8)]
        inst = build(9, edges)
        rs = embed(inst)
        sides = cycle_sides(rs, [0, 1, 2, 3, 4, 5])
        assert sorted(len(s.inside) for s in sides) == [0, 3]
        outer_holder = rs.face_of[rs.faces[rs.outer_face_of_component[0]][0]]
        # whichever side holds the other component, the partition is exact
        assert sum(len(s.inside) for s in sides) + 6 == inst.n

    def test_outer_face_boundary_has_everything_on_one_side(self):
        # wheel: hub 6 joined to a 6-cycle; the rim is a face boundary
        edges = [(i, (i + 1) % 6) for i in range(6)] + [(6, i) for i in range(6)]
        inst = build(7, edges)
        sides = cycle_sides(embed(inst), [0, 1, 2, 3, 4, 5])
        assert sorted(len(s.inside) for s in sides) == [0, 1]

    def test_k4_triangle_sides(self):
        sides = cycle_sides(embed(complete(4)), [0, 1, 2])
        assert sorted(len(s.inside) for s in sides) == [0, 1]

    def test_rejects_non_cycles(self):
        inst = build(4, [(0, 1), (1, 2), (2, 3)])
        rs = embed(inst)
        with pytest.raises(NotACycleError):
            cycle_sides(rs, [0, 1, 2])  # 2-0 is not an edge
        with pytest.raises(NotACycleError):
            cycle_sides(rs, [0, 1])

    @given(st.integers(0, 300))
    @settings(max_examples=40, deadline=None)
    def test_sides_partition_non_boundary_vertices(self, seed):
        inst = generate_planar(10, 0.9, seed)
        rs = embed(inst)
        cycle = None
        for face in rs.faces:
            walk = [u for u, _ in face]
            if len(walk) >= 3 and len(set(walk)) == len(walk):
                cycle = walk
                break
        if cycle is None:
            return
        a, b = cycle_sides(rs, cycle)
        assert a.inside.isdisjoint(b.inside)
        assert len(a.inside) + len(b.inside) + len(cycle) == inst.n
        assert not (a.inside | b.inside) & set(cycle)

    def test_subgraphs_of_planar_stay_embeddable(self):
        inst = generate_planar(20, 1.0, seed=11)
        embed(inst)
        inst.delete_edge(*inst.edges()[0])
        inst.delete_vertex(inst.vertices[-1])
        embed(inst)
