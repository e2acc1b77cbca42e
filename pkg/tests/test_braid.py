import doctest

import pytest
from hypothesis import given, strategies as st

import braidld.braid
from braidld.braid import (BraidWord, EPSILON, PositiveDecomposition, bracket,
                           free_cancel, invert, linking_numbers, max_index,
                           parse_braid, reverse, shift, sigma,
                           sigma_decompose, strand_permutation)

braids = st.builds(BraidWord, st.lists(
    st.integers(-6, 6).filter(lambda k: k != 0), max_size=12).map(tuple))


class TestWord:
    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            BraidWord((1, 0))

    def test_rejects_non_int(self):
        with pytest.raises(ValueError):
            BraidWord(("1",))

    def test_mul_is_concatenation(self):
        assert parse_braid("1 2") * parse_braid("-1") == parse_braid("1 2 -1")

    def test_str(self):
        assert str(EPSILON) == "ε"
        assert str(parse_braid("1 -2")) == "1 -2"

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_braid("0")
        with pytest.raises(ValueError):
            parse_braid("a")


class TestShift:
    def test_single_generator(self):
        assert shift(sigma(1), 1) == sigma(2)

    def test_empty(self):
        assert shift(EPSILON, 5) == EPSILON

    def test_letterwise(self):
        assert shift(parse_braid("-2 1"), 1) == parse_braid("-3 2")

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            shift(sigma(1), -1)

    @given(braids, st.integers(0, 4), st.integers(0, 4))
    def test_composes(self, p, a, b):
        assert shift(p, 0) == p
        assert shift(shift(p, a), b) == shift(p, a + b)


class TestReverseInvert:
    def test_reverse_example(self):
        assert reverse(parse_braid("1 -2")) == parse_braid("-2 1")

    def test_reverse_empty(self):
        assert reverse(EPSILON) == EPSILON

    def test_invert_examples(self):
        assert invert(parse_braid("1 2")) == parse_braid("-2 -1")
        assert invert(EPSILON) == EPSILON
        assert invert(parse_braid("-3")) == parse_braid("3")

    @given(braids)
    def test_involutions(self, p):
        assert reverse(reverse(p)) == p
        assert invert(invert(p)) == p

    @given(braids)
    def test_invert_freely_cancels(self, p):
        assert free_cancel(p * invert(p)) == EPSILON


class TestBracket:
    def test_empty_empty(self):
        assert bracket(EPSILON, EPSILON) == sigma(1)

    def test_left_only(self):
        assert bracket(sigma(1), EPSILON) == parse_braid("1 1 -2")

    def test_right_only(self):
        assert bracket(EPSILON, sigma(1)) == parse_braid("2 1")

    @given(braids, braids)
    def test_length(self, p, q):
        assert len(bracket(p, q)) == 2 * len(p) + len(q) + 1

    @given(braids, braids)
    def test_shift_commutes_letterwise(self, p, q):
        lhs = shift(bracket(p, q), 1)
        rhs = shift(p, 1) * shift(q, 2) * sigma(2) * invert(shift(p, 2))
        assert lhs == rhs


class TestSigmaDecompose:
    def test_first_occurrence(self):
        got = sigma_decompose(parse_braid("-2 1 2"), 1)
        assert got == PositiveDecomposition(parse_braid("-2"), 1, parse_braid("2"))

    def test_absent_generator(self):
        assert sigma_decompose(parse_braid("2 3"), 1) is None

    def test_inverse_present(self):
        assert sigma_decompose(parse_braid("1 -1"), 1) is None

    def test_bad_index(self):
        with pytest.raises(ValueError):
            sigma_decompose(EPSILON, 0)

    @given(braids, st.integers(1, 6))
    def test_witness_invariants(self, p, n):
        got = sigma_decompose(p, n)
        if got is None:
            assert n not in p.letters or -n in p.letters
        else:
            assert got.reassemble() == p
            assert n not in got.p1.letters and -n not in got.p1.letters
            assert -n not in got.p2.letters


class TestMaxIndex:
    def test_examples(self):
        assert max_index(parse_braid("1 -4")) == 4
        assert max_index(EPSILON) == 0
        assert max_index(parse_braid("2 2")) == 2


class TestWordInvariants:
    def test_permutation_identity_word(self):
        assert strand_permutation(EPSILON) == (1,)
        assert strand_permutation(sigma(1)) == (2, 1)

    def test_linking_of_cancelling_pair(self):
        assert linking_numbers(parse_braid("1 -1")) == {}
        assert linking_numbers(parse_braid("1 1")) == {(1, 2): 2}

    @given(st.integers(1, 5), st.integers(1, 5))
    def test_relation_invariance(self, i, j):
        if abs(i - j) > 1:
            u, v = BraidWord((i, j)), BraidWord((j, i))
        elif abs(i - j) == 1:
            u, v = BraidWord((i, j, i)), BraidWord((j, i, j))
        else:
            return
        pad = BraidWord((6,))  # equalise the strand count on both sides
        assert strand_permutation(u * pad) == strand_permutation(v * pad)
        assert linking_numbers(u * pad) == linking_numbers(v * pad)

    @given(braids)
    def test_trivial_word_has_trivial_invariants(self, p):
        w = p * invert(p)
        assert strand_permutation(w) == tuple(range(1, max_index(w) + 2))
        assert linking_numbers(w) == {}


def test_free_cancel_examples():
    assert free_cancel(parse_braid("1 -1 2")) == parse_braid("2")
    # never applied implicitly: a word keeps its written letters
    assert parse_braid("1 -1").letters == (1, -1)


def test_doctests():
    assert doctest.testmod(braidld.braid).failed == 0
