import random

import pytest

import oracles
from braidld.action import ActionConfig
from braidld.braid import EPSILON, bracket, invert, parse_braid, sigma
from braidld.errors import InverseNotApplicable, WordCapExceeded
from braidld.ldterm import (Apply, LdSequence, Leaf, X, chi,
                            irreflexivity_witness, ld_equal, left_prefix,
                            parse_term, parse_term_list, sequence_act, size)
from braidld.sampling import random_braid, random_term


def T(text):
    return parse_term(text)


class TestChi:
    def test_leaf_is_base(self):
        assert chi(X, sigma(2)) == sigma(2)

    def test_single_application(self):
        assert chi(T("(x x)")) == sigma(1)

    def test_right_nesting(self):
        assert chi(T("(x (x x))")) == parse_braid("2 1")

    def test_left_nesting(self):
        # bracket(σ1, ε) = σ1·σ1·σ2⁻¹ by direct substitution
        assert chi(T("((x x) x)")) == parse_braid("1 1 -2")

    def test_homomorphism_letterwise(self):
        rng = random.Random(20)
        for _ in range(100):
            p = random_term(rng, 7)
            q = random_term(rng, 7)
            r = random_braid(rng, max_len=4, max_index=3)
            assert chi(Apply(p, q), r) == bracket(chi(p, r), chi(q, r))


class TestLdEqual:
    def test_ld_law_instance(self):
        assert ld_equal(T("(x (x x))"), T("((x x) (x x))"))

    def test_generator_vs_square(self):
        assert not ld_equal(X, T("(x x)"))

    def test_reflexive(self):
        rng = random.Random(21)
        for _ in range(30):
            t = random_term(rng, 9)
            assert ld_equal(t, t)

    def test_ld_law_lifts(self):
        rng = random.Random(22)
        for _ in range(100):
            s, t, u = (random_term(rng, 7) for _ in range(3))
            assert ld_equal(Apply(s, Apply(t, u)), Apply(Apply(s, t), Apply(s, u)))

    def test_base_independence(self):
        rng = random.Random(23)
        for _ in range(60):
            s = random_term(rng, 5)
            t = random_term(rng, 5)
            r = random_braid(rng, max_len=4, max_index=3)
            assert ld_equal(s, t) == ld_equal(s, t, r)

    def test_agrees_with_rewriting_oracle(self):
        rng = random.Random(24)
        for _ in range(100):
            s = random_term(rng, 7)
            t = oracles.rewrite_chain(rng, s, rng.randint(1, 3))
            assert ld_equal(s, t)

    def test_agrees_with_conjugation_model(self):
        rng = random.Random(25)
        checked = 0
        while checked < 100:
            s = random_term(rng, 7)
            t = random_term(rng, 7)
            if oracles.conj_eval(s) != oracles.conj_eval(t):
                assert not ld_equal(s, t)
                checked += 1


class TestLeftPrefix:
    def test_examples(self):
        assert left_prefix(X, [X]) == T("(x x)")
        assert left_prefix(X, [X, X]) == T("((x x) x)")
        assert left_prefix(T("(x x)"), [X]) == T("((x x) x)")

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            left_prefix(X, [])


class TestIrreflexivity:
    def test_small_witnesses_are_false(self):
        assert not irreflexivity_witness(X, [X])
        assert not irreflexivity_witness(X, [X, X])
        assert not irreflexivity_witness(T("(x x)"), [X])

    def test_chi_of_prefix(self):
        # χ(((x·x)·x)) = bracket(σ1, ε), frozen from the formula
        assert chi(left_prefix(X, [X, X])) == parse_braid("1 1 -2")


class TestSequenceAct:
    def setup_method(self):
        self.P = T("((x x) x)")
        self.Q = T("(x x)")
        self.R = T("(x (x x))")
        self.S = X

    def test_forward_step(self):
        seq = LdSequence((self.P, self.Q, self.R, self.S))
        got = sequence_act(seq, sigma(2))
        assert got.terms == (self.P, Apply(self.Q, self.R), self.Q, self.S)

    def test_inverse_step(self):
        seq = LdSequence((self.P, Apply(self.Q, self.R), self.Q, self.S))
        got = sequence_act(seq, sigma(2, -1))
        assert got.terms == (self.P, self.Q, self.R, self.S)

    def test_inverse_on_leaf_rejected(self):
        with pytest.raises(InverseNotApplicable):
            sequence_act(LdSequence((X, X)), sigma(1, -1))

    def test_inverse_accepts_ld_equal_left_factor(self):
        # left factor differs structurally from the neighbour but is LD-equal
        c = Apply(T("((x x) (x x))"), self.Q)
        d = T("(x (x x))")
        got = sequence_act(LdSequence((c, d)), sigma(1, -1))
        assert got.terms == (d, self.Q)

    def test_tail_extension(self):
        got = sequence_act(LdSequence((), tail=self.Q), sigma(3))
        assert got.terms == (self.Q, self.Q, Apply(self.Q, self.Q), self.Q)
        assert got.tail == self.Q

    def test_positive_roundtrip(self):
        rng = random.Random(26)
        for _ in range(50):
            terms = tuple(random_term(rng, 5) for _ in range(3))
            letters = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 5)))
            p = parse_braid(" ".join(map(str, letters)))
            seq = LdSequence(terms)
            back = sequence_act(sequence_act(seq, p), invert(p))
            assert back.terms[:3] == terms
            assert all(t == X for t in back.terms[3:])


class TestTermText:
    def test_roundtrip(self):
        for text in ("x", "(x x)", "((x x) (x (x x)))"):
            assert str(parse_term(text)) == text

    def test_whitespace_insensitive(self):
        assert parse_term("((x x)(x x))") == parse_term("( ( x x ) ( x x ) )")

    def test_errors(self):
        for text in ("", "y", "(x)", "(x x x)", "(x x", "x x"):
            with pytest.raises(ValueError):
                parse_term(text)

    def test_term_list(self):
        got = parse_term_list("(x x) x ((x x) x)")
        assert [str(t) for t in got] == ["(x x)", "x", "((x x) x)"]

    def test_size(self):
        assert size(X) == 1
        assert size(T("(x x)")) == 3
        assert size(T("((x x) (x x))")) == 7
