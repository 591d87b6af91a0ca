"""Orders on groups represented by their positive cones, i.e. sign functions.

``f < g`` in a right order is read off as ``sign(g * f^-1) == POSITIVE``;
for a bi-order the same test works with either side.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Callable, Sequence

from . import magnus
from .errors import Indeterminate, OracleUnknown
from .signs import Answer, Sign
from .words import Word

_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


@dataclass(frozen=True)
class SignFunction:
    carrier: str
    evaluate: Callable
    bi_invariant: bool = False

    def __call__(self, element) -> Sign:
        return self.evaluate(element)

    def compare(self, f, g, mul, inv) -> Sign:
        """Sign of ``g * f^-1``: POSITIVE means ``f < g``."""
        return self.evaluate(mul(g, inv(f)))


def lex_product_sign(sx: SignFunction, sy: SignFunction) -> SignFunction:
    def evaluate(pair):
        x, y = pair
        s = sx(x)
        return s if s is not Sign.ZERO else sy(y)

    return SignFunction(f"({sx.carrier}) x ({sy.carrier})", evaluate,
                        sx.bi_invariant and sy.bi_invariant)


# --- archimedean orders on free abelian groups -------------------------------

@dataclass(frozen=True)
class ArchimedeanWeights:
    """Weights ``sqrt(p_1), sqrt(p_2), ...`` for distinct primes ``p_i``.

    Square roots of distinct primes are linearly independent over the
    rationals, so a nonzero integer combination never vanishes and the
    interval refinement below always terminates.
    """

    primes: tuple
    initial_bits: int = 32

    @classmethod
    def first(cls, n: int) -> "ArchimedeanWeights":
        if n > len(_PRIMES):
            raise ValueError("too many generators for the prime table")
        return cls(_PRIMES[:n])

    def __len__(self):
        return len(self.primes)

    def values(self) -> list[float]:
        return [p ** 0.5 for p in self.primes]

    def combination_sign(self, exponents: Sequence[int]) -> Sign:
        """Exact sign of ``sum n_i sqrt(p_i)``."""
        if len(exponents) != len(self.primes):
            raise ValueError("exponent vector length differs from number of weights")
        if not any(exponents):
            return Sign.ZERO
        bits = self.initial_bits
        while True:
            lo = hi = 0
            scale = 1 << bits
            for n, p in zip(exponents, self.primes):
                if not n:
                    continue
                r = isqrt(p * scale * scale)  # r <= sqrt(p)*2^bits < r+1
                if n > 0:
                    lo += n * r
                    hi += n * (r + 1)
                else:
                    lo += n * (r + 1)
                    hi += n * r
            if lo > 0:
                return Sign.POSITIVE
            if hi < 0:
                return Sign.NEGATIVE
            bits *= 2


def archimedean_abelian_sign(exponents: Sequence[int], weights: ArchimedeanWeights,
                             negative: bool = False) -> Sign:
    """Sign of an element of ``Z^n`` under the weight embedding into the reals.

    With ``negative`` set every generator is made negative: the element is
    positive iff its weighted sum is below zero.
    """
    s = weights.combination_sign(exponents)
    return -s if negative else s


def lex_vector_sign(exponents: Sequence[int]) -> Sign:
    """Lexicographic order on ``Z^n``: the first nonzero coordinate decides."""
    for n in exponents:
        if n:
            return Sign.of(n)
    return Sign.ZERO


# --- standard central orders --------------------------------------------------

def central_layer_sign(w: Word, generator_order: Sequence, level1: Callable,
                       cap: int = magnus.DEFAULT_CAP) -> Sign:
    """Sign of ``w`` in a standard central order.

    ``generator_order`` lists the generators of the free group (least first);
    ``level1`` maps the exponent-sum vector (in that order) to a sign.  Higher
    layers expand the class over the Lyndon basis and let the coefficient of
    the greatest basis element decide, basis elements being ranked by their
    s-monomial with ties broken by the Lyndon word.
    """
    order = tuple(generator_order)
    wt = magnus.weight(w, cap, order)
    if wt is magnus.TRIVIAL:
        return Sign.ZERO
    if wt is magnus.INDETERMINATE:
        raise Indeterminate(f"weight of word exceeds cap {cap}")
    if wt == 1:
        return level1([w.exponent_sum(g) for g in order])
    series = magnus.magnus_expand(w, wt, order, max_cap=max(cap, magnus.MAX_CAP))
    coords = magnus.lie_coordinates_dict(series.component(wt))
    lead = max((lw for lw, c in coords.items() if c), key=magnus.lyndon_order_key)
    return Sign.of(coords[lead])


def scc_sign(alphabet: Sequence, generator_order: Sequence | None = None,
             level1: Callable | None = None, cap: int = magnus.DEFAULT_CAP) -> SignFunction:
    """Standard central order on the free group over ``alphabet``."""
    order = tuple(generator_order if generator_order is not None else alphabet)
    level1 = level1 or lex_vector_sign
    return SignFunction(
        f"scc[{','.join(map(str, order))}]",
        lambda w: central_layer_sign(w, order, level1, cap),
        bi_invariant=True,
    )


def hatH_lex_sign(m: int) -> SignFunction:
    """Lexicographic order on ``Z^m`` (an abelian stand-in for the quotient group)."""
    def evaluate(vec):
        if len(vec) != m:
            raise ValueError(f"expected a vector of length {m}")
        return lex_vector_sign(vec)

    return SignFunction(f"lex Z^{m}", evaluate, bi_invariant=True)


def fx_right_sign(hatH: SignFunction, n_oracle: Callable, scc_on_Fx: SignFunction) -> SignFunction:
    """Right order on ``F(x)``: the coset in the quotient decides, ties go to ``N``.

    ``hatH`` is a sign on words that factors through the quotient by ``N``.
    """
    def evaluate(f: Word) -> Sign:
        s = hatH(f)
        if s is not Sign.ZERO:
            return s
        answer = n_oracle(f)
        if answer is Answer.UNKNOWN:
            raise OracleUnknown(f"membership of {f} in N undecided")
        if answer is Answer.NO:
            raise ValueError("quotient order is zero on a word outside N")
        return scc_on_Fx(f)

    return SignFunction("F(x) right", evaluate)


def g0_right_sign(fb: SignFunction, fx: SignFunction) -> SignFunction:
    """``v h > 1`` iff ``v`` is positive, or ``v = 1`` and ``h`` is positive."""
    def evaluate(g) -> Sign:
        s = fb(g.v)
        return s if s is not Sign.ZERO else fx(g.w)

    return SignFunction("G0 right", evaluate)


def g0_biorder_sign(fb: SignFunction, fx_bi: SignFunction) -> SignFunction:
    def evaluate(g) -> Sign:
        s = fb(g.v)
        return s if s is not Sign.ZERO else fx_bi(g.w)

    return SignFunction("G0 bi", evaluate, bi_invariant=True)
