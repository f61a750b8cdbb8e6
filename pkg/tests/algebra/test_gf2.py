import numpy as np
import pytest

from algebra import (
    BitMatrix,
    BitVector,
    DimensionMismatchError,
    SpanSolver,
    combine,
    coordinates_in_span,
    kernel_basis,
    rank,
    row_reduce,
    span,
)
from tests.oracles import span_size
from topology import incidence_matrix


def random_matrix(rng, rows, cols) -> BitMatrix:
    return BitMatrix.from_dense([[rng.randrange(2) for _ in range(cols)] for _ in range(rows)])


class TestBitVector:
    def test_string_round_trip_keeps_coordinate_order(self):
        v = BitVector.from_string("110")
        assert v[0] == 1 and v[1] == 1 and v[2] == 0
        assert v.to_string() == "110"
        assert v.weight == 2
        assert v.support() == [0, 1]

    def test_xor_requires_equal_lengths(self):
        with pytest.raises(DimensionMismatchError):
            BitVector.from_string("10") ^ BitVector.from_string("101")

    def test_precedes_is_support_inclusion(self):
        assert BitVector.from_string("100").precedes(BitVector.from_string("110"))
        assert not BitVector.from_string("101").precedes(BitVector.from_string("110"))

    def test_delete_and_concat(self):
        v = BitVector.from_string("1011")
        assert v.delete([1]).to_string() == "111"
        assert v.concat(v).to_string() == "10111011"


class TestRowReduce:
    def test_identity(self):
        echelon = row_reduce(BitMatrix.from_dense(np.eye(2, dtype=int)))
        assert echelon.rank == 2
        assert echelon.pivots == (0, 1)

    def test_single_row(self):
        echelon = row_reduce(BitMatrix.from_dense([[1, 1]]))
        assert echelon.rank == 1
        assert echelon.pivots == (0,)

    def test_rank_matches_row_span_oracle(self, rng):
        for _ in range(25):
            m = random_matrix(rng, 4, 6)
            rows = [r.bits for r in m.row_vectors()]
            assert 2 ** rank(m) == span_size(rows)

    def test_wide_matrices_span_several_words(self, rng):
        m = random_matrix(rng, 5, 150)
        rows = [r.bits for r in m.row_vectors()]
        assert 2 ** rank(m) == span_size(rows)
        assert np.array_equal(m.to_dense(), BitMatrix.from_rows(m.row_vectors(), 150).to_dense())

    def test_idempotent_on_rref(self, rng):
        for _ in range(10):
            echelon = row_reduce(random_matrix(rng, 5, 7))
            again = row_reduce(echelon.rref)
            assert again.rref == echelon.rref
            assert again.pivots == echelon.pivots

    def test_pivots_strictly_increase(self, rng):
        echelon = row_reduce(random_matrix(rng, 6, 9))
        assert list(echelon.pivots) == sorted(set(echelon.pivots))


class TestKernel:
    def test_identity_has_trivial_kernel(self):
        assert kernel_basis(BitMatrix.from_dense(np.eye(3, dtype=int))) == []

    def test_all_ones_row(self):
        assert [v.to_string() for v in kernel_basis(BitMatrix.from_dense([[1, 1]]))] == ["11"]

    def test_tetrahedron_kernel_is_all_ones(self, tetrahedron):
        basis = kernel_basis(incidence_matrix(tetrahedron))
        assert [v.to_string() for v in basis] == ["1111"]

    def test_kernel_vectors_are_annihilated_and_complete(self, rng):
        for _ in range(25):
            m = random_matrix(rng, rng.randrange(1, 6), rng.randrange(1, 8))
            basis = kernel_basis(m)
            for v in basis:
                assert not m.multiply(v)
            assert m.cols == rank(m) + len(basis)
            assert span_size([v.bits for v in basis]) == 2 ** len(basis)


class TestSpan:
    basis = [BitVector.from_string("110"), BitVector.from_string("011")]

    def test_coordinates(self):
        assert coordinates_in_span(self.basis, BitVector.from_string("101")) == (1, 1)
        assert coordinates_in_span(self.basis, BitVector.zeros(3)) == (0, 0)
        assert coordinates_in_span(self.basis, BitVector.from_string("100")) is None

    def test_coordinates_recover_every_subset(self):
        rows = [BitVector(8, bits) for bits in (0b00000111, 0b00011100, 0b01100001, 0b10000000)]
        solver = SpanSolver(rows, 8)
        for k in range(16):
            subset = tuple((k >> i) & 1 for i in range(4))
            assert solver.coordinates(combine(rows, subset, 8)) == subset

    def test_dependent_basis_is_rejected(self):
        with pytest.raises(DimensionMismatchError):
            SpanSolver(self.basis + [BitVector.from_string("101")], 3)

    def test_span_is_binary_counter_order(self):
        assert [v.to_string() for v in span(self.basis, 3)] == ["000", "110", "011", "101"]
