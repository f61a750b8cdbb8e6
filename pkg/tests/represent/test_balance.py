import pytest

from algebra import BinaryCode, WeightEnumerator
from represent import (
    RepresentationError,
    balance,
    block_excess_parities,
    next_even_above,
    represent_code,
    subdivision_target,
    weight_law_violations,
)
from tests.oracles import random_code
from topology import cycle_space_dimension, weight_enumerator_cycles


@pytest.mark.parametrize("n, expected", [(0, 2), (1, 2), (2, 4), (3, 4), (7, 8)])
def test_next_even_above(n, expected):
    assert next_even_above(n) == expected


def test_equal_excesses_need_no_subdivision(even_code):
    rep = represent_code(even_code)
    balanced = balance(rep)
    assert balanced.e == 14
    assert balanced.is_balanced
    assert balanced.config == rep.config
    assert weight_enumerator_cycles(balanced.config) == WeightEnumerator({0: 1, 16: 2, 30: 1})


def test_unequal_excesses_are_levelled():
    rep = represent_code(BinaryCode.from_strings(["1100", "1111"]))
    assert rep.excesses() == [14, 24]
    balanced = balance(rep)
    assert balanced.e == 24
    assert balanced.excesses() == [24, 24]
    assert len(balanced.config) == len(rep.config) + 10
    assert weight_enumerator_cycles(balanced.config) == WeightEnumerator({0: 1, 26: 1, 28: 1, 50: 1})


def test_subdivisions_keep_the_cycle_space(rng):
    for _ in range(15):
        n = rng.randrange(2, 7)
        code = random_code(rng, n, rng.randrange(1, min(n, 4)), even=True)
        rep = represent_code(code)
        balanced = balance(rep)
        assert balanced.is_balanced
        assert cycle_space_dimension(balanced.config) == code.dimension
        assert weight_law_violations(balanced) == []
        assert balanced.e >= next_even_above(n)
        assert balanced.e <= 6 * n + 2
        assert all(k % 2 == 0 for k in rep.excesses())


def test_excess_parities_follow_even_code(even_code):
    assert block_excess_parities(represent_code(even_code)) == [0, 0]


def test_weight_law_needs_balanced_representation(even_code):
    with pytest.raises(RepresentationError) as excinfo:
        weight_law_violations(represent_code(even_code))
    assert excinfo.value.code == "unbalanced"


def test_subdivision_target_avoids_slot_vertices():
    slots = frozenset({(0, 1, 2)})
    block = frozenset({(0, 1, 2), (0, 3, 4), (5, 6, 7), (3, 4, 5)})
    assert subdivision_target(block, slots) == (3, 4, 5)


def test_subdivision_target_falls_back_to_non_slot_triangle():
    slots = frozenset({(0, 1, 2)})
    block = frozenset({(0, 1, 2), (1, 3, 4), (0, 3, 5)})
    assert subdivision_target(block, slots) == (0, 3, 5)


def test_subdivision_target_needs_a_non_slot_triangle():
    slots = frozenset({(0, 1, 2)})
    with pytest.raises(RepresentationError):
        subdivision_target(slots, slots)
