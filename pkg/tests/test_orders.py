import random

import pytest

from ogroup.orders import (ArchimedeanWeights, SignFunction, archimedean_abelian_sign,
                           hatH_lex_sign, lex_product_sign, lex_vector_sign, scc_sign)
from ogroup.signs import Sign
from ogroup.words import Alphabet, Word, commutator, parse_word, random_word

from conftest import XY, random_g0

INT = SignFunction("Z", lambda n: Sign.of(n), True)


class TestLexProduct:
    sign = lex_product_sign(INT, INT)

    def test_examples(self):
        assert self.sign((0, 0)) is Sign.ZERO
        assert self.sign((1, -5)) is Sign.POSITIVE
        assert self.sign((0, -1)) is Sign.NEGATIVE

    def test_first_coordinate_dominates(self):
        assert self.sign((-1, 100)) is Sign.NEGATIVE


class TestArchimedean:
    weights = ArchimedeanWeights.first(4)

    def test_b_generators_negative(self):
        assert archimedean_abelian_sign([1, 0, 0, 0], self.weights, negative=True) is Sign.NEGATIVE
        assert archimedean_abelian_sign([-1, 0, 0, 0], self.weights, negative=True) is Sign.POSITIVE

    def test_b1_over_b2(self):
        # -(sqrt2 - sqrt3) > 0
        assert archimedean_abelian_sign([1, -1, 0, 0], self.weights, negative=True) is Sign.POSITIVE

    def test_zero_is_syntactic(self):
        assert self.weights.combination_sign([0, 0, 0, 0]) is Sign.ZERO

    def test_near_cancellation_forces_refinement(self):
        # 2*10681^2 - 3*8721^2 = -1, so 10681 sqrt2 - 8721 sqrt3 is about -3.3e-5
        coarse = ArchimedeanWeights((2, 3), initial_bits=2)
        assert coarse.combination_sign([10681, -8721]) is Sign.NEGATIVE
        assert coarse.combination_sign([-10681, 8721]) is Sign.POSITIVE

    def test_matches_floating_point_when_clear(self):
        rng = random.Random(2)
        vals = self.weights.values()
        for _ in range(500):
            vec = [rng.randint(-20, 20) for _ in range(4)]
            approx = sum(n * v for n, v in zip(vec, vals))
            if abs(approx) > 1e-9:
                assert self.weights.combination_sign(vec) is Sign.of(1 if approx > 0 else -1)

    def test_archimedean_property(self):
        rng = random.Random(4)
        vals = self.weights.values()
        for _ in range(200):
            u = [rng.randint(-5, 5) for _ in range(4)]
            v = [rng.randint(-5, 5) for _ in range(4)]
            if not any(u) or not any(v):
                continue
            vu = abs(sum(n * c for n, c in zip(u, vals)))
            vv = abs(sum(n * c for n, c in zip(v, vals)))
            k = int(vv / vu) + 1
            assert k <= 10 ** 6 and k * vu > vv

    def test_length_checked(self):
        with pytest.raises(ValueError):
            self.weights.combination_sign([1, 2])


class TestSCC:
    sign = scc_sign(("x", "y"))

    def test_generator(self):
        assert self.sign(parse_word("x", XY)) is Sign.POSITIVE
        assert self.sign(parse_word("y^-1", XY)) is Sign.NEGATIVE

    def test_commutator_unit(self):
        c = commutator(parse_word("x", XY), parse_word("y", XY))
        assert self.sign(c) in (Sign.POSITIVE, Sign.NEGATIVE)
        assert self.sign(c.inverse()) is -self.sign(c)

    def test_identity(self):
        assert self.sign(Word.identity(XY)) is Sign.ZERO

    def test_axioms_and_bi_invariance(self):
        rng = random.Random(8)
        for _ in range(500):
            a = random_word(XY, rng.randint(0, 6), rng)
            b = random_word(XY, rng.randint(0, 6), rng)
            g = random_word(XY, rng.randint(0, 6), rng)
            s = self.sign(a)
            assert (s is Sign.ZERO) == a.is_identity()
            assert self.sign(a.inverse()) is -s
            assert self.sign(a.conjugate(g)) is s
            if s is Sign.POSITIVE and self.sign(b) is Sign.POSITIVE:
                assert self.sign(a * b) is Sign.POSITIVE


class TestFx:
    def test_examples(self, ctx):
        x1 = ctx.parse_x("x1")
        assert ctx.fx(x1) is Sign.POSITIVE
        c = commutator(x1, ctx.parse_x("x2"))
        assert ctx.fx(c) is ctx.fx_bi(c)
        assert ctx.fx(Word.identity(ctx.X)) is Sign.ZERO

    def test_quotient_decides_first(self, ctx):
        w = ctx.parse_x("x2^-1 x1^-1 x2 x1 x2^-1")
        assert ctx.fx(w) is Sign.NEGATIVE

    def test_right_invariance(self, ctx):
        rng = random.Random(9)
        for _ in range(300):
            f, g, h = (random_word(ctx.X, rng.randint(0, 6), rng) for _ in range(3))
            before = ctx.fx(g * f.inverse())
            after = ctx.fx((g * h) * (f * h).inverse())
            assert before is after

    def test_hatH_vector_length(self):
        with pytest.raises(ValueError):
            hatH_lex_sign(2)((1,))


class TestG0Orders:
    def test_right_examples(self, ctx):
        g0 = ctx.g0
        assert ctx.g0_right(g0.element(ctx.parse_b("b1^-1"), ctx.parse_x("x1^-5"))) is Sign.POSITIVE
        assert ctx.g0_right(g0.x(1)) is Sign.POSITIVE
        assert ctx.g0_right(g0.identity) is Sign.ZERO

    def test_bi_examples(self, ctx):
        g0 = ctx.g0
        assert ctx.g0_bi(g0.element(ctx.parse_b("b1"), ctx.parse_x("x2^3"))) is Sign.NEGATIVE
        assert ctx.g0_bi(g0.x(1)) is Sign.POSITIVE

    def test_axioms(self, ctx):
        rng = random.Random(10)
        g0 = ctx.g0
        for _ in range(500):
            f, g, h = (random_g0(ctx, rng) for _ in range(3))
            for sign in (ctx.g0_right, ctx.g0_bi):
                s = sign(f)
                assert (s is Sign.ZERO) == f.is_identity()
                assert sign(g0.inv(f)) is -s
            # right invariance of the right order on G0
            lhs = ctx.g0_right(g0.mul(g, g0.inv(f)))
            rhs = ctx.g0_right(g0.mul(g0.mul(g, h), g0.inv(g0.mul(f, h))))
            assert lhs is rhs
            # conjugation invariance of the bi-order
            conj = g0.mul(g0.mul(g0.inv(h), f), h)
            assert ctx.g0_bi(conj) is ctx.g0_bi(f)

    def test_positive_cone_closed(self, ctx):
        rng = random.Random(11)
        g0 = ctx.g0
        for _ in range(300):
            f, g = random_g0(ctx, rng), random_g0(ctx, rng)
            if ctx.g0_right(f) is Sign.POSITIVE and ctx.g0_right(g) is Sign.POSITIVE:
                assert ctx.g0_right(g0.mul(f, g)) is Sign.POSITIVE


def test_lex_vector_sign():
    assert lex_vector_sign([0, -2, 5]) is Sign.NEGATIVE
    assert lex_vector_sign([]) is Sign.ZERO


def test_custom_alphabet_scc_uses_given_order():
    alpha = Alphabet("ab", ("a", "b"))
    up, down = scc_sign(alpha, ("a", "b")), scc_sign(alpha, ("b", "a"))
    w = parse_word("a^-1 b", alpha)
    assert up(w) is -down(w)
