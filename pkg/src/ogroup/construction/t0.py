"""The normal closure ``T0`` of ``t`` in ``G1``: a free group on the ``t^f``, ``f`` in Lambda.

A ``T0`` word is a :class:`~ogroup.words.Word` whose generators are canonical
:class:`G0Element` conjugators; the run ``(f, e)`` stands for ``(t^f)^e``.
"""

from __future__ import annotations

from ..errors import EmptyWord
from ..orders import central_layer_sign
from ..signs import Ordering, Sign
from ..words import Word
from .context import ConstructionContext, check_in_t0
from .g0 import G0Element


def t_gen(f: G0Element, e: int = 1) -> Word:
    return Word(((f, e),))


def t0_collect(word: Word, ctx: ConstructionContext) -> Word:
    """Rewrite a word over ``x, b, t`` with trivial ``G0`` image as a ``T0`` word.

    ``g0 t^e1 g1 ... t^en gn`` equals the product of ``(t^ei)^{gi ... gn}``
    whenever ``g0 g1 ... gn = 1``.
    """
    check_in_t0(ctx, word)
    seq = ctx.g1_sequence(word)
    g0 = ctx.g0
    runs = []
    suffix = ctx.identity
    for i in range(seq.n, 0, -1):
        suffix = g0.mul(seq.base[i], suffix)
        runs.append((ctx.canon(suffix), seq.exps[i - 1]))
    return Word(tuple(reversed(runs)))


def shift(w: Word, a: G0Element, ctx: ConstructionContext) -> Word:
    """Conjugate by ``a`` in ``G0``: ``t^f -> t^{f a}``."""
    if a.is_identity():
        return w
    mul, canon = ctx.g0.mul, ctx.canon
    return w.map_generators(lambda f: canon(mul(f, a)))


def kill(w: Word, g: G0Element, ctx: ConstructionContext, strict: bool = False) -> Word:
    """Image in ``K(g)`` (or ``K_g`` when ``strict``): delete generators below ``g``.

    Non-strict deletes every ``t^f`` with ``f <= g``; strict only ``f < g``.
    """
    cmp = ctx.lambda_compare
    drop = (Ordering.LESS,) if strict else (Ordering.LESS, Ordering.EQUAL)
    dead = {f for f in w.generators() if cmp(f, g) in drop}
    if not dead:
        return w
    return Word(tuple((f, e) for f, e in w.runs if f not in dead))


def cg_member(w: Word, g: G0Element, ctx: ConstructionContext, strict: bool = False) -> bool:
    """Membership in ``C(g)`` (or ``C_g`` when ``strict``)."""
    return kill(w, g, ctx, strict).is_identity()


def witness_g(w: Word, ctx: ConstructionContext) -> G0Element:
    """The unique ``g`` with ``w`` in ``C(g)`` but not in ``C_g``."""
    if w.is_identity():
        raise EmptyWord("the identity lies in every C(g)")
    for f in ctx.lambda_sorted(w.generators()):
        if cg_member(w, f, ctx):
            return f
    raise AssertionError("a word always lies in C(max of its conjugators)")


def k1_image(w: Word, ctx: ConstructionContext) -> Word:
    """Move ``w`` to the slot of the identity and project to ``K_1``."""
    g = witness_g(w, ctx)
    moved = shift(w, ctx.g0.inv(g), ctx)
    return kill(moved, ctx.identity, ctx, strict=True)


def t0_sign(w: Word, ctx: ConstructionContext, cap: int | None = None) -> Sign:
    """Sign of ``w`` in the ``G1``-invariant order on ``T0``."""
    if w.is_identity():
        return Sign.ZERO
    image = k1_image(w, ctx)
    order = ctx.lambda_sorted(image.generators())
    return central_layer_sign(image, order, _level1_top_generator, cap or ctx.cap)


def _level1_top_generator(vec) -> Sign:
    # every t^f is positive and the greater conjugator dominates
    for n in reversed(vec):
        if n:
            return Sign.of(n)
    return Sign.ZERO


def t0_compare(u: Word, v: Word, ctx: ConstructionContext) -> Ordering:
    """Compare two ``T0`` elements (the order is two-sided)."""
    return Ordering(int(t0_sign(v.inverse() * u, ctx)))


def g1_sign(word: Word, ctx: ConstructionContext) -> Sign:
    """Sign in ``G1`` with ``T0`` convex: the ``G0`` image decides first."""
    image = ctx.g0_image(word)
    if not image.is_identity():
        return ctx.g0_bi(image)
    return t0_sign(t0_collect(word, ctx), ctx)


def lambda_sign(f: G0Element, g: G0Element, ctx: ConstructionContext) -> Ordering:
    return ctx.lambda_compare(f, g)


# --- the endomorphisms y_i and the Cauchy approximants -----------------------------

def y_image(f: G0Element, i: int, ctx: ConstructionContext) -> Word:
    """``(t^f)^{y_i} = [b_i, t]^f = (t^{b_i f})^-1 t^f``."""
    return Word(((ctx.b_power(i, 1, f), -1), (f, 1)))


def y_apply(w: Word, i: int, ctx: ConstructionContext) -> Word:
    return w.substitute(lambda f: y_image(f, i, ctx))


def cauchy_c(g: G0Element, i: int, k: int, ctx: ConstructionContext) -> Word:
    """``c_k(g,i) = t^{b_i^k g} t^{b_i^{k-1} g} ... t^g``."""
    return Word(tuple((ctx.b_power(i, j, g), 1) for j in range(k, -1, -1)))


def y_inverse_approx(w: Word, i: int, K: int, ctx: ConstructionContext) -> Word:
    """Truncation at level ``K`` of the preimage of ``w`` under ``y_i``."""
    return w.substitute(lambda f: cauchy_c(f, i, K, ctx))

