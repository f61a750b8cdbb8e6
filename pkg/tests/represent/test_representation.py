import pytest

from algebra import BinaryCode, BitVector, WeightEnumerator
from represent import (
    RepresentationError,
    map_f,
    represent_basis_vector,
    represent_code,
    sphere_size,
    uncovered_cycle,
    verify_bijection,
)
from tests.oracles import random_code
from topology import enumerate_cycles, is_cycle, weight_enumerator_cycles


@pytest.mark.parametrize("n, m", [(1, 4), (3, 4), (4, 4), (5, 6), (6, 6), (9, 10)])
def test_sphere_size(n, m):
    assert sphere_size(n) == m


class TestBasisVector:
    def test_block_is_a_single_cycle(self):
        b = BitVector.from_string("110")
        block = represent_basis_vector(b, 3, 4)
        # two slots, the two unused sphere faces, two bands of six
        assert len(block.config) == 2 + 2 + 12
        assert weight_enumerator_cycles(block.config) == WeightEnumerator({0: 1, 16: 1})
        assert set(block.ports) == {"B1", "B2"}

    def test_zero_vector_rejected(self):
        with pytest.raises(RepresentationError) as excinfo:
            represent_basis_vector(BitVector.zeros(3), 3, 4)
        assert excinfo.value.code == "zero-vector"

    def test_sphere_too_small(self):
        with pytest.raises(RepresentationError):
            represent_basis_vector(BitVector.from_string("11000"), 5, 4)


class TestRepresentCode:
    def test_small_code(self, even_code):
        rep = represent_code(even_code)
        assert rep.m == 4
        assert sorted(rep.slots) == [0, 1, 2]
        assert [len(block) for block in rep.blocks] == [16, 16]
        assert rep.excesses() == [14, 14]
        assert rep.e is None and not rep.is_balanced
        assert len(rep.config) == 3 + 2 * 14
        assert rep.block_vector(0).weight == 16
        assert is_cycle(rep.config, rep.block_vector(1))

    def test_blocks_meet_only_in_slots(self, even_code):
        rep = represent_code(even_code)
        assert rep.blocks[0] & rep.blocks[1] == {rep.slots[1]}

    def test_unused_coordinates_have_no_slot(self):
        rep = represent_code(BinaryCode.from_strings(["0110"]))
        assert sorted(rep.slots) == [1, 2]

    def test_odd_code_rejected(self, repetition_code):
        with pytest.raises(RepresentationError) as excinfo:
            represent_code(repetition_code)
        assert excinfo.value.code == "odd-code"

    def test_zero_code(self):
        rep = represent_code(BinaryCode.zero(3))
        assert len(rep.config) == 0
        assert rep.blocks == ()


class TestMapping:
    def test_image_of_basis_vector_is_its_block(self, even_code):
        rep = represent_code(even_code)
        for i, b in enumerate(even_code.basis):
            assert map_f(rep, b) == rep.block_vector(i)

    def test_sum_cancels_shared_slot(self, even_code):
        rep = represent_code(even_code)
        image = map_f(rep, BitVector.from_string("101"))
        assert image.weight == 30
        assert rep.slots[1] not in image.triangles()

    def test_bijection_on_random_even_codes(self, rng):
        for _ in range(25):
            n = rng.randrange(2, 7)
            code = random_code(rng, n, rng.randrange(0, min(n, 4)), even=True)
            rep = represent_code(code)
            report = verify_bijection(rep)
            assert report.passed, report.counterexample
            assert uncovered_cycle(rep, enumerate_cycles(rep.config)) is None

    def test_minimal_words_map_to_minimal_cycles(self):
        code = BinaryCode.from_strings(["1100", "0110"])
        report = verify_bijection(represent_code(code))
        assert report.checks == {"onto": True, "size": True, "injective": True, "minimal": True}
