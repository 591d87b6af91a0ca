"""Wiring of the whole construction for one presentation ``<x | u_1, ..., u_n>``.

A :class:`ConstructionContext` holds the rank, the relators, an ``N``-oracle,
the transversal for ``N`` in ``F(x)`` and all sign functions:

* ``hatH``   order on the quotient ``F(x)/N``, as a sign on ``x``-words;
* ``fx_bi``  standard central order on ``F(x)``;
* ``fx``     right order on ``F(x)`` (quotient first, then ``N``);
* ``fb``     standard central order on ``F(b)``, archimedean on the first
             layer, every ``b_i`` negative;
* ``g0_right`` / ``g0_bi``  the right order and the bi-order on ``G0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key, lru_cache
from typing import Callable, Sequence

from .. import hnn, orders
from ..errors import NotInT0, OracleUnknown, RankMismatch
from ..signs import Answer, Ordering, Sign
from ..words import Alphabet, Word, parse_word
from .g0 import G0, G0Element, b_alphabet, x_alphabet, y_alphabet
from .oracles import (NOracle, abelianize, all_commutator_relators, hermite_rows,
                      n_abelianization_oracle, n_bounded_search_oracle)

DEFAULT_TRUNCATION = 8


@dataclass
class ConstructionContext:
    m: int
    relators: list
    oracle: NOracle
    transversal: Callable  # x-word -> canonical x-word of the same N-coset
    hatH: orders.SignFunction
    truncation: int = DEFAULT_TRUNCATION
    cap: int = 8
    name: str = "custom"
    g0: G0 = field(init=False)

    def __post_init__(self):
        self.g0 = G0(self.m)
        self.X = x_alphabet(self.m)
        self.B = b_alphabet(self.m)
        self.Y = y_alphabet(self.m)
        self.letters = self.X + self.B + Alphabet("t", ("t",))
        self.full = self.letters + self.Y
        self.fx_bi = orders.scc_sign(self.X.symbols, cap=self.cap)
        self.fx = orders.fx_right_sign(self.hatH, self.oracle, self.fx_bi)
        weights = orders.ArchimedeanWeights.first(2 * self.m)
        self.weights = weights
        self.fb = orders.scc_sign(
            self.B.symbols,
            level1=lambda vec: orders.archimedean_abelian_sign(vec, weights, negative=True),
            cap=self.cap,
        )
        self.g0_right = orders.g0_right_sign(self.fb, self.fx)
        self.g0_bi = orders.g0_biorder_sign(self.fb, self.fx_bi)
        self.identity = self.g0.identity
        self.canon = lru_cache(maxsize=200_000)(self._canon)
        self._compare_cached = lru_cache(maxsize=500_000)(self._compare)
        self.lambda_key = cmp_to_key(self.lambda_compare)

    # -- transversal and the set Lambda -------------------------------------
    def _canon(self, g: G0Element) -> G0Element:
        return G0Element(g.v, self.transversal(g.w))

    def in_N(self, w: Word) -> Answer:
        return self.oracle(w)

    def lambda_element(self, v: Word | None = None, h: Word | None = None) -> G0Element:
        return self.canon(self.g0.element(v, h))

    def b_power(self, i: int, k: int, g: G0Element | None = None) -> G0Element:
        """Canonical form of ``b_i^k g``."""
        g = g if g is not None else self.identity
        return self.canon(self.g0.mul(self.g0.b(i, k), g) if k else g)

    # -- the right order on Lambda ------------------------------------------
    def _compare(self, f: G0Element, g: G0Element) -> Ordering:
        if f == g:
            return Ordering.EQUAL
        s = self.g0_right(self.g0.mul(g, self.g0.inv(f)))
        if s is Sign.ZERO:
            return Ordering.EQUAL
        return Ordering.LESS if s is Sign.POSITIVE else Ordering.GREATER

    def lambda_compare(self, f: G0Element, g: G0Element) -> Ordering:
        """LESS when ``f`` precedes ``g`` in the right order on ``G0``."""
        return self._compare_cached(f, g)

    def lambda_max(self, items):
        return max(items, key=self.lambda_key)

    def lambda_min(self, items):
        return min(items, key=self.lambda_key)

    def lambda_sorted(self, items):
        return sorted(items, key=self.lambda_key)

    # -- parsing ------------------------------------------------------------
    def parse(self, text: str, with_y: bool = False) -> Word:
        return parse_word(text, self.full if with_y else self.letters)

    def parse_x(self, text: str) -> Word:
        return parse_word(text, self.X)

    def parse_b(self, text: str) -> Word:
        return parse_word(text, self.B)

    def x_word(self, word: Word) -> Word:
        """Restrict a word over mixed letters to its ``x`` part (must be pure)."""
        if any(g not in self.X for g, _ in word.runs):
            raise RankMismatch("expected a word in the x letters only")
        return Word(word.runs, self.X)

    # -- G1 as an HNN extension of G0 ---------------------------------------
    def g1_spec(self) -> hnn.HnnSpec:
        g0 = self.g0

        def in_N(g: G0Element) -> Answer:
            if not g.v.is_identity():
                return Answer.NO
            return self.oracle(g.w)

        return hnn.HnnSpec(
            identity=g0.identity,
            multiply=g0.mul,
            invert=g0.inv,
            is_identity=lambda g: g.is_identity(),
            in_A=in_N,
            in_B=in_N,
            rep_A=self.canon,
            rep_B=self.canon,
            phi=lambda g: g,
            phi_inv=lambda g: g,
        )

    def g1_sequence(self, word: Word) -> hnn.HnnSequence:
        spec = self.g1_spec()
        items = []
        for g, e in word.letters():
            if g == "t":
                items.append("t" if e == 1 else "T")
            elif g in self.X:
                items.append(self.g0.x(int(g[1:]), e))
            elif g in self.B:
                items.append(self.g0.b(int(g[1:]), e))
            else:
                raise RankMismatch(f"letter {g} is not a generator of G1")
        return hnn.HnnSequence.from_items(items, spec)

    def g0_image(self, word: Word) -> G0Element:
        """Image in ``G1/T0 = G0`` (delete every ``t``)."""
        return self.g0.from_word(Word(tuple((g, e) for g, e in word.runs if g != "t")))

    def g1_is_trivial(self, word: Word) -> bool:
        return hnn.is_trivial(self.g1_sequence(word), self.g1_spec())


# --- presets -------------------------------------------------------------------

def _abelian_transversal(m: int):
    X = x_alphabet(m)

    def transversal(w: Word) -> Word:
        vec = abelianize(w, X)
        return Word(tuple((f"x{i + 1}", a) for i, a in enumerate(vec)), X)

    return transversal


def abelian_preset(m: int = 2, truncation: int = DEFAULT_TRUNCATION, cap: int = 8) -> ConstructionContext:
    """Relators all ``[x_i, x_j]``: the quotient is ``Z^m`` with the lexicographic order."""
    relators = all_commutator_relators(m)
    return abelian_context(m, relators, truncation=truncation, cap=cap)


def abelian_context(m: int, relators: Sequence[Word], truncation: int = DEFAULT_TRUNCATION,
                    cap: int = 8) -> ConstructionContext:
    X = x_alphabet(m)
    relators = [Word(r.runs, X) for r in relators]
    if hermite_rows([abelianize(r, X) for r in relators]):
        raise ValueError("the abelian preset needs relators with trivial exponent sums "
                         "(quotient Z^m); other lattices have no lexicographic order")
    oracle = n_abelianization_oracle(m, relators)
    lex = orders.hatH_lex_sign(m)
    hatH = orders.SignFunction("lex Z^m on F(x)", lambda w: lex(abelianize(w, X)), True)
    return ConstructionContext(m, relators, oracle, _abelian_transversal(m), hatH,
                               truncation=truncation, cap=cap, name="abelian")


def search_context(m: int, relators: Sequence[Word], bounds=(2, 1),
                   truncation: int = DEFAULT_TRUNCATION, cap: int = 8) -> ConstructionContext:
    """Arbitrary relators with a bounded-search oracle; Lambda-level work refuses."""
    X = x_alphabet(m)
    relators = [Word(r.runs, X) for r in relators]
    oracle = n_bounded_search_oracle(relators, bounds, X)

    def transversal(w: Word) -> Word:
        if w.is_identity():
            return w
        raise OracleUnknown("no transversal is available for the bounded-search oracle")

    def hatH_eval(w: Word) -> Sign:
        if w.is_identity():
            return Sign.ZERO
        raise OracleUnknown("no order on the quotient is available for the bounded-search oracle")

    hatH = orders.SignFunction("unknown quotient order", hatH_eval)
    return ConstructionContext(m, relators, oracle, transversal, hatH,
                               truncation=truncation, cap=cap, name="search")


def check_in_t0(ctx: ConstructionContext, word: Word) -> None:
    if not ctx.g0_image(word).is_identity():
        raise NotInT0(f"{word} has nontrivial image in G0")
