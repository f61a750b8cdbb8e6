import pytest

from algebra import EnumeratorError, WeightEnumerator, split_by_degree, total_enumerator


def W(**terms: int) -> WeightEnumerator:
    return WeightEnumerator({int(k[1:]): v for k, v in terms.items()})


def test_add_term():
    empty = WeightEnumerator()
    assert empty.add_term(0) == W(x0=1)
    assert W(x0=1).add_term(2) == W(x0=1, x2=1)
    assert W(x2=1).add_term(2) == W(x2=2)


def test_zero_coefficients_are_dropped():
    assert WeightEnumerator({0: 1, 3: 0}).items() == [(0, 1)]


def test_negative_coefficient_rejected():
    with pytest.raises(EnumeratorError):
        WeightEnumerator({1: -1})


class TestFold:
    def test_worked_example(self):
        assert W(x0=1, x16=2, x30=1).fold_mod(14) == W(x0=1, x2=3)

    def test_large_modulus_is_identity(self):
        w = W(x0=1, x3=4, x7=2)
        assert w.fold_mod(8) == w

    def test_modulus_one(self):
        assert W(x0=1).fold_mod(1) == W(x0=1)

    def test_mass_is_preserved(self):
        w = W(x0=1, x5=3, x9=2, x13=7)
        for e in range(1, 15):
            assert w.fold_mod(e).total() == w.total()

    def test_modulus_must_be_positive(self):
        with pytest.raises(EnumeratorError):
            W(x0=1).fold_mod(0)


class TestHalve:
    def test_direct_substitution(self):
        assert W(x0=1, x4=3).halve_exponents() == W(x0=1, x2=3)
        assert W(x0=1).halve_exponents() == W(x0=1)

    def test_odd_exponent(self):
        with pytest.raises(EnumeratorError) as excinfo:
            W(x3=1).halve_exponents()
        assert excinfo.value.code == "odd-exponent"

    def test_inverts_doubling(self):
        w = W(x0=2, x1=5, x6=1)
        assert w.double_exponents().halve_exponents() == w


class TestSplitByDegree:
    def test_single_object(self):
        parts = split_by_degree([(0, 0)])
        assert parts == [W(x0=1)]

    def test_small_code(self):
        # {000, 110, 011, 101} over basis {110, 011}
        parts = split_by_degree([(0, 0), (2, 1), (2, 1), (2, 2)])
        assert parts == [W(x0=1), W(x2=2), W(x2=1)]
        assert total_enumerator(parts) == W(x0=1, x2=3)

    def test_padding_to_max_degree(self):
        parts = split_by_degree([(0, 0)], max_degree=3)
        assert len(parts) == 4
        assert not any(parts[1:])


def test_text_round_trip_and_comments():
    w = WeightEnumerator.from_text("# kernel\n0 1\n16 2\n\n30 1\n")
    assert w == W(x0=1, x16=2, x30=1)
    assert w.to_text() == "0 1\n16 2\n30 1\n"


def test_text_rejects_garbage():
    with pytest.raises(EnumeratorError):
        WeightEnumerator.from_text("0 1 2\n")
