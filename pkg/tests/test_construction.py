import random

import pytest

from ogroup.construction.context import abelian_context, abelian_preset, check_in_t0, search_context
from ogroup.construction.g0 import G0, g0_act_b, inner_image, x_alphabet, b_alphabet
from ogroup.construction.oracles import (all_commutator_relators, hermite_rows, lattice_contains,
                                         n_abelianization_oracle, n_bounded_search_oracle)
from ogroup.errors import NotInT0, OracleUnknown, RankMismatch
from ogroup.signs import Answer
from ogroup.words import Word, commutator, parse_word, random_word

X = x_alphabet(2)
B = b_alphabet(2)


def xw(text):
    return parse_word(text, X)


def bw(text):
    return parse_word(text, B)


class TestG0Action:
    def test_b1_fixes_x1(self):
        assert g0_act_b(xw("x1"), bw("b1"), 2) == xw("x1")

    def test_b1_conjugates_x2(self):
        assert g0_act_b(xw("x2"), bw("b1"), 2) == xw("x1^-1 x2 x1")

    def test_opposite_letters_cancel(self):
        assert g0_act_b(xw("x2"), bw("b1 b3"), 2) == xw("x2")

    def test_inner_image(self):
        assert inner_image(bw("b2 b4^-2"), 2) == xw("x2 x2^2")

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            g0_act_b(parse_word("x1", x_alphabet(3)), bw("b1"), 2)

    def test_group_axioms(self):
        rng = random.Random(0)
        g0 = G0(2)

        def rand():
            return g0.element(random_word(B, rng.randint(0, 4), rng), random_word(X, rng.randint(0, 4), rng))

        for _ in range(200):
            a, b, c = rand(), rand(), rand()
            assert g0.mul(g0.mul(a, b), c) == g0.mul(a, g0.mul(b, c))
            assert g0.mul(a, g0.inv(a)) == g0.identity
            assert g0.mul(g0.inv(a), a) == g0.identity

    def test_b_acts_by_conjugation_in_g0(self):
        g0 = G0(2)
        rng = random.Random(1)
        for _ in range(100):
            w = random_word(X, rng.randint(0, 5), rng)
            v = random_word(B, rng.randint(0, 4), rng)
            ev, ew = g0.element(v=v), g0.element(w=w)
            assert g0.mul(g0.mul(g0.inv(ev), ew), ev) == g0.element(w=g0_act_b(w, v, 2))


class TestOracles:
    def test_commutator_conjugate_in_N(self):
        oracle = n_abelianization_oracle(2, all_commutator_relators(2))
        assert oracle(commutator(xw("x1"), xw("x2")).conjugate(xw("x2"))) is Answer.YES

    def test_generator_not_in_N(self):
        oracle = n_abelianization_oracle(2, all_commutator_relators(2))
        assert oracle(xw("x1")) is Answer.NO

    def test_extra_relator_lattice(self):
        oracle = n_abelianization_oracle(2, all_commutator_relators(2) + [xw("x1^3 x2^-6")])
        assert oracle(xw("x1^-3 x2^6")) is Answer.YES
        assert oracle(xw("x1 x2^-2")) is Answer.NO

    def test_bounded_search_finds_conjugate(self):
        oracle = n_bounded_search_oracle([xw("x1^2")], (1, 1), X)
        assert oracle(xw("x2 x1^2 x2^-1")) is Answer.YES

    def test_bounded_search_abelian_no(self):
        oracle = n_bounded_search_oracle([xw("x1^2")], (1, 1), X)
        assert oracle(xw("x1")) is Answer.NO

    def test_bounded_search_unknown_out_of_reach(self):
        oracle = n_bounded_search_oracle([xw("x1^2")], (1, 1), X)
        assert oracle(xw("x2^2 x1^2 x2^-2")) is Answer.UNKNOWN

    def test_hermite_lattice(self):
        hnf = hermite_rows([[2, 4], [0, 6]])
        assert lattice_contains([4, 2], hnf)
        assert not lattice_contains([1, 0], hnf)
        assert lattice_contains([0, 0], hnf)

    def test_abelian_context_rejects_finite_quotient(self):
        with pytest.raises(ValueError):
            abelian_context(2, all_commutator_relators(2) + [xw("x1^2")])


class TestG1:
    def test_t_commutes_with_commutator(self, ctx):
        w = ctx.parse("t x1^-1 x2^-1 x1 x2")
        assert ctx.g1_is_trivial(commutator(ctx.parse("t"), ctx.parse("x1^-1 x2^-1 x1 x2")))
        assert not ctx.g1_is_trivial(w)

    def test_t_does_not_commute_with_x1(self, ctx):
        assert not ctx.g1_is_trivial(commutator(ctx.parse("t"), ctx.parse("x1")))

    def test_conjugated_commutator(self, ctx):
        u = ctx.parse("x1^-1 x2^-1 x1 x2").conjugate(ctx.parse("x1^3 x2^-1"))
        assert ctx.g1_is_trivial(commutator(ctx.parse("t"), u))

    def test_b_relation(self, ctx):
        # b1^-1 x2 b1 = x1^-1 x2 x1 holds already in G0
        assert ctx.g1_is_trivial(ctx.parse("b1^-1 x2 b1 x1^-1 x2^-1 x1"))

    def test_t_commutator_matches_oracle(self, ctx):
        rng = random.Random(7)
        t = ctx.parse("t")
        for _ in range(200):
            w = Word(random_word(ctx.X, rng.randint(0, 14), rng).runs, ctx.letters)
            expected = ctx.in_N(Word(w.runs, ctx.X)) is Answer.YES
            assert ctx.g1_is_trivial(commutator(t, w)) == expected

    def test_t0_membership(self, ctx):
        check_in_t0(ctx, ctx.parse("t^3 x1 t x1^-1"))
        with pytest.raises(NotInT0):
            check_in_t0(ctx, ctx.parse("t x1"))


class TestSearchPreset:
    def test_refuses_transversal(self):
        ctx = search_context(2, [xw("x1^2")], (1, 1))
        with pytest.raises(OracleUnknown):
            ctx.transversal(xw("x1"))

    def test_g1_answer_via_search(self):
        ctx = search_context(2, [xw("x1^2")], (1, 1))
        t = ctx.parse("t")
        assert ctx.g1_is_trivial(commutator(t, ctx.parse("x2 x1^2 x2^-1")))


def test_preset_rank_three():
    ctx = abelian_preset(3)
    assert len(ctx.relators) == 3
    assert ctx.g1_is_trivial(commutator(ctx.parse("t"), ctx.parse("x3^-1 x1^-1 x3 x1")))
