from itertools import combinations

import pytest

from algebra import BitVector, WeightEnumerator
from tests.oracles import brute_force_cycles
from topology import (
    ConfigurationError,
    CycleGuardError,
    TriangularConfiguration,
    VertexAllocator,
    cycle_space_dimension,
    difference,
    enumerate_cycles,
    incidence_matrix,
    intersection,
    is_circuit,
    is_cycle,
    pairwise_vertex_disjoint,
    subdivide,
    symmetric_difference,
    union,
    weight_enumerator_cycles,
)


def config(*triples) -> TriangularConfiguration:
    return TriangularConfiguration.from_triangles(triples)


def random_config(rng, vertices: int, count: int) -> TriangularConfiguration:
    pool = list(combinations(range(vertices), 3))
    return TriangularConfiguration.from_triangles(rng.sample(pool, count))


class TestConstruction:
    def test_closure(self, tetrahedron):
        assert tetrahedron.vertices == (0, 1, 2, 3)
        assert len(tetrahedron.edges) == 6
        assert tetrahedron.euler_characteristic() == 2

    def test_triangles_are_normalized(self):
        assert config((2, 0, 1)).triangles == ((0, 1, 2),)

    def test_duplicate_triangle(self):
        with pytest.raises(ConfigurationError) as excinfo:
            config((0, 1, 2), (2, 1, 0))
        assert excinfo.value.code == "duplicate"

    def test_degenerate_triangle(self):
        with pytest.raises(ConfigurationError):
            config((0, 0, 1))

    def test_edge_degrees(self, tetrahedron):
        assert all(tetrahedron.edge_degree(e) == 2 for e in tetrahedron.edges)
        assert tetrahedron.triangles_on_edge((1, 0)) == (0, 1)
        assert tetrahedron.edge_degree((0, 9)) == 0

    def test_vector_indices(self, tetrahedron):
        v = tetrahedron.vector([(1, 2, 3), (0, 1, 2)])
        assert v.indices() == [0, 3]
        assert v.weight == 2
        with pytest.raises(ConfigurationError):
            tetrahedron.vector([(4, 5, 6)])


class TestSetOperations:
    def test_difference_drops_orphan_edges(self):
        a = config((0, 1, 2), (1, 2, 3))
        b = config((1, 2, 3))
        d = difference(a, b)
        assert d.triangles == ((0, 1, 2),)
        assert 3 not in d.vertices
        assert (1, 3) not in d.edges

    def test_symmetric_difference(self):
        a = config((0, 1, 2), (1, 2, 3))
        b = config((1, 2, 3), (2, 3, 4))
        assert set(symmetric_difference(a, b).triangles) == {(0, 1, 2), (2, 3, 4)}

    def test_union_keeps_first_order(self):
        a = config((1, 2, 3))
        b = config((0, 1, 2), (1, 2, 3))
        assert union(a, b).triangles == ((1, 2, 3), (0, 1, 2))
        assert intersection(a, b).triangles == ((1, 2, 3),)


class TestCycleSpace:
    def test_single_triangle_has_no_cycle(self, single_triangle):
        assert cycle_space_dimension(single_triangle) == 0
        assert weight_enumerator_cycles(single_triangle) == WeightEnumerator({0: 1})

    def test_empty_configuration(self):
        assert weight_enumerator_cycles(TriangularConfiguration.empty()) == WeightEnumerator({0: 1})

    def test_tetrahedron(self, tetrahedron):
        assert weight_enumerator_cycles(tetrahedron) == WeightEnumerator({0: 1, 4: 1})
        assert is_circuit(tetrahedron, tetrahedron.full_vector())

    def test_two_tetrahedra(self, two_tetrahedra):
        assert weight_enumerator_cycles(two_tetrahedra) == WeightEnumerator({0: 1, 4: 2, 8: 1})
        assert not is_circuit(two_tetrahedra, two_tetrahedra.full_vector())
        assert not is_circuit(two_tetrahedra, two_tetrahedra.zero_vector())

    def test_incidence_shape(self, tetrahedron):
        assert incidence_matrix(tetrahedron).shape == (6, 4)

    def test_matches_brute_force(self, rng):
        for _ in range(30):
            c = random_config(rng, 6, rng.randrange(1, 13))
            expected = brute_force_cycles(c)
            found = {v.bits.bits for v in enumerate_cycles(c)}
            assert found == expected
            if len(c) > 8:
                continue
            for mask in range(1 << len(c)):
                assert is_cycle(c, BitVector(len(c), mask)) == (mask in expected)

    def test_guard(self):
        tetrahedra = config(
            *[tuple(4 * i + v for v in t) for i in range(3) for t in combinations(range(4), 3)]
        )
        with pytest.raises(CycleGuardError):
            enumerate_cycles(tetrahedra, max_dim=2)


class TestSubdivide:
    def test_single_triangle(self, single_triangle):
        sub = subdivide(single_triangle, (0, 1, 2))
        assert sub.triangles == ((0, 1, 3), (1, 2, 3), (0, 2, 3))
        assert len(sub.vertices) == 4
        assert len(sub.edges) == 6

    def test_tetrahedron_cycle_weight_grows_by_two(self, tetrahedron):
        sub = subdivide(tetrahedron, (0, 1, 2))
        assert len(sub) == 6
        assert weight_enumerator_cycles(sub) == WeightEnumerator({0: 1, 6: 1})

    def test_cycle_dimension_preserved(self, rng):
        for _ in range(15):
            c = random_config(rng, 6, rng.randrange(1, 10))
            target = rng.choice(c.triangles)
            assert cycle_space_dimension(subdivide(c, target)) == cycle_space_dimension(c)

    def test_missing_triangle(self, single_triangle):
        with pytest.raises(ConfigurationError):
            subdivide(single_triangle, (0, 1, 3))

    def test_vertex_collision(self, single_triangle):
        with pytest.raises(ConfigurationError):
            subdivide(single_triangle, (0, 1, 2), vertex=1)


def test_allocator_never_reuses_ids(tetrahedron):
    allocator = VertexAllocator.above(tetrahedron)
    assert allocator.fresh_triangle() == (4, 5, 6)
    allocator.reserve(10)
    assert allocator.fresh_vertex() == 11


def test_pairwise_vertex_disjoint():
    assert pairwise_vertex_disjoint([(0, 1, 2), (3, 4, 5), (6, 7, 8)])
    assert not pairwise_vertex_disjoint([(0, 1, 2), (3, 4, 5), (2, 6, 7)])
    assert pairwise_vertex_disjoint([])
