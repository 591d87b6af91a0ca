"""Rewriting conjugates ``t^{alpha(y) v(b) f(x)}`` into the generating set Gen.

Gen consists of the ``t^{alpha v h}`` with ``h`` in the transversal and
``alpha`` either empty, or beginning with some ``y_i^-1`` while ``v`` does not
begin with ``b_i^{+-1}``.  Three rules drive the recursion on
``(len(alpha), len(v))``::

    split      t^{y_i a' v h}        = (t^{a' (b_i v) h})^-1 . t^{a' v h}
    absorb+    t^{y_i^-1 a' b_i v' h} = t^{y_i^-1 a' v' h} . (t^{a' v' h})^-1
    absorb-    t^{y_i^-1 a' b_i^-1 v' h} = t^{y_i^-1 a' v' h} . t^{a' b_i^-1 v' h}

(``y`` commutes with ``b`` and ``x``; the rules come from ``t^{y_i} = [b_i, t]``.)

The equality of both sides holds in the completion of ``T0``; it is checked
here modulo ``C(g')`` by truncated evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import TruncationInsufficient
from ..signs import Ordering
from ..words import Word
from .context import ConstructionContext
from .g0 import G0Element
from .t0 import kill, shift


@dataclass(frozen=True)
class Conjugator:
    """The triple ``(alpha, v, f)`` standing for ``alpha(y) v(b) f(x)``."""

    alpha: Word
    v: Word
    f: Word

    def __str__(self):
        parts = [str(p) for p in (self.alpha, self.v, self.f) if not p.is_identity()]
        return " ".join(parts) if parts else "1"

    def measure(self) -> tuple[int, int]:
        return (len(self.alpha), len(self.v))


@dataclass(frozen=True)
class Factor:
    sign: int
    conj: Conjugator

    def __str__(self):
        body = f"t^({self.conj})"
        return body if self.sign == 1 else f"{body}^-1"


@dataclass(frozen=True)
class RewriteStep:
    rule: str
    relation: str
    source: Conjugator
    produced: tuple


@dataclass
class RewriteResult:
    factors: list
    trace: list = field(default_factory=list)


def _y_index(g: str) -> int:
    return int(g[1:])


def parse_conjugator(text: str, ctx: ConstructionContext) -> Conjugator:
    """Split a word over ``y, b, x`` into its three parts (the parts commute past each other
    as described by the relations, so any interleaving of ``y`` with the rest is allowed;
    ``b`` letters must precede ``x`` letters)."""
    word = ctx.parse(text, with_y=True)
    ys, bs, xs = [], [], []
    for g, e in word.runs:
        if g in ctx.Y:
            ys.append((g, e))
        elif g in ctx.B:
            if xs:
                raise ValueError("b letters must come before x letters in a conjugator")
            bs.append((g, e))
        elif g in ctx.X:
            xs.append((g, e))
        else:
            raise ValueError(f"letter {g} cannot appear in a conjugator")
    return Conjugator(Word(tuple(ys), ctx.Y), Word(tuple(bs), ctx.B), Word(tuple(xs), ctx.X))


def is_gen(c: Conjugator, ctx: ConstructionContext) -> bool:
    if ctx.transversal(c.f) != c.f:
        return False
    if c.alpha.is_identity():
        return True
    g, s = c.alpha.first_letter()
    if s != -1:
        return False
    first = c.v.first_letter()
    return first is None or first[0] != f"b{_y_index(g)}"


def gen_rewrite(factors, ctx: ConstructionContext) -> RewriteResult:
    """Rewrite a product of ``t``-conjugates into Gen; returns factors and a step trace.

    ``factors`` is a sequence of :class:`Factor` (or ``(sign, Conjugator)`` pairs).
    """
    trace: list = []
    out: list = []
    for item in factors:
        fac = item if isinstance(item, Factor) else Factor(*item)
        part = _rewrite_one(fac.conj, ctx, trace)
        if fac.sign == -1:
            part = [Factor(-p.sign, p.conj) for p in reversed(part)]
        out.extend(part)
    return RewriteResult(out, trace)


def _rewrite_one(c: Conjugator, ctx: ConstructionContext, trace: list) -> list:
    h = ctx.transversal(c.f)
    if h != c.f:
        c = Conjugator(c.alpha, c.v, h)
    if is_gen(c, ctx):
        return [Factor(1, c)]
    g, s = c.alpha.first_letter()
    i = _y_index(g)
    rest = Word(((g, -s),), ctx.Y) * c.alpha  # alpha'
    b = Word.gen(f"b{i}", 1, ctx.B)
    if s == 1:
        left = Conjugator(rest, b * c.v, c.f)
        right = Conjugator(rest, c.v, c.f)
        produced = (Factor(-1, left), Factor(1, right))
        rule, relation = "split", f"d3: t^y{i} = [b{i},t], d2: y{i} commutes with b"
    else:
        lead = c.v.first_letter()
        v_rest = Word(((lead[0], -lead[1]),), ctx.B) * c.v  # v'
        if lead[1] == 1:
            produced = (Factor(1, Conjugator(c.alpha, v_rest, c.f)),
                        Factor(-1, Conjugator(rest, v_rest, c.f)))
            rule, relation = "absorb+", f"t^(y{i}^-1 b{i}) = t^(y{i}^-1) t^-1"
        else:
            produced = (Factor(1, Conjugator(c.alpha, v_rest, c.f)),
                        Factor(1, Conjugator(rest, c.v, c.f)))
            rule, relation = "absorb-", f"t^(y{i}^-1 b{i}^-1) = t^(y{i}^-1) t^(b{i}^-1)"
    for p in produced:
        assert p.conj.measure() < c.measure(), "rewriting measure must decrease"
    trace.append(RewriteStep(rule, relation, c, produced))
    out = []
    for p in produced:
        part = _rewrite_one(p.conj, ctx, trace)
        if p.sign == -1:
            part = [Factor(-q.sign, q.conj) for q in reversed(part)]
        out.extend(part)
    return out


# --- truncated evaluation in T0 ---------------------------------------------------

@dataclass
class Evaluation:
    word: Word  # T0 word, exact modulo C(threshold) and modulo C(error)
    error: G0Element | None  # greatest conjugator of a dropped tail, if any


def _max(ctx, a, b):
    if a is None:
        return b
    if b is None:
        return a
    return a if ctx.lambda_compare(a, b) is not Ordering.LESS else b


def _inverse_image(f: G0Element, i: int, K: int, floor: G0Element, ctx: ConstructionContext):
    """``t^f`` under ``y_i^-1`` modulo ``C(floor)``, truncated at ``K`` terms past ``t^f``.

    Returns the word and the first dropped conjugator above ``floor`` (or None).
    """
    runs = []
    j = 0
    cur = f
    while ctx.lambda_compare(cur, floor) is Ordering.GREATER:
        if j > K:
            return Word(tuple(reversed(runs))), cur
        runs.append((cur, 1))
        j += 1
        cur = ctx.b_power(i, 1, cur)
    return Word(tuple(reversed(runs))), None


def evaluate_t_alpha(alpha: Word, floor: G0Element, K: int, ctx: ConstructionContext) -> Evaluation:
    """``t^alpha`` in ``T0`` modulo ``C(floor)``; ``y^-1`` letters are truncated at ``K``."""
    word = Word(((ctx.identity, 1),))
    error = None
    word = kill(word, floor, ctx)
    for g, s in alpha.letters():
        i = _y_index(g)
        if s == 1:
            word = kill(word.substitute(lambda f: Word(((ctx.b_power(i, 1, f), -1), (f, 1)))),
                        floor, ctx)
        else:
            cache = {}

            def image(f):
                nonlocal error
                w, err = _inverse_image(f, i, K, floor, ctx)
                if err is not None:
                    error = _max(ctx, error, err)
                return w

            word = word.substitute(lambda f: cache[f] if f in cache else cache.setdefault(f, image(f)))
    return Evaluation(word, error)


def evaluate_factors(factors, g_prime: G0Element, K: int, ctx: ConstructionContext) -> Evaluation:
    """Evaluate a product of ``t``-conjugates in ``T0`` modulo ``C(g_prime)``."""
    total = Word()
    error = None
    memo: dict = {}
    for fac in factors:
        c = fac.conj
        shift_by = ctx.g0.element(c.v, c.f)
        floor = ctx.canon(ctx.g0.mul(g_prime, ctx.g0.inv(shift_by)))
        key = (c.alpha, floor)
        if key not in memo:
            memo[key] = evaluate_t_alpha(c.alpha, floor, K, ctx)
        ev = memo[key]
        w = kill(shift(ev.word, shift_by, ctx), g_prime, ctx)
        if ev.error is not None:
            error = _max(ctx, error, ctx.canon(ctx.g0.mul(ev.error, shift_by)))
        total = total * (w if fac.sign == 1 else w.inverse())
    return Evaluation(total, error)


def default_accuracy(factors, ctx: ConstructionContext, depth: int = 8) -> G0Element:
    """An accuracy target ``depth`` ``b``-steps below the lowest factor's conjugator."""
    tops = []
    for fac in factors:
        top = ctx.canon(ctx.g0.element(fac.conj.v, fac.conj.f))
        tops.extend(ctx.b_power(i, depth, top) for i in range(1, 2 * ctx.m + 1))
    return ctx.lambda_min(tops) if tops else ctx.b_power(1, depth)


def default_truncation(factors) -> int:
    total = sum(len(f.conj.v) for f in factors)
    return max(8, 2 * total + 2)


@dataclass
class VerifyReport:
    ok: bool
    K: int
    g_prime: G0Element
    threshold: G0Element | None
    lhs: Word
    rhs: Word


def gen_rewrite_verify_report(product, output, ctx: ConstructionContext, K: int | None = None,
                              g_prime: G0Element | None = None) -> VerifyReport:
    """Compare both sides modulo ``C(g_prime)`` after truncating ``y^-1`` letters at ``K``.

    Without ``g_prime`` the accuracy target starts eight steps below the lowest
    factor and is raised to the truncation error if that lies higher, so the
    comparison at the default ``K`` is always exact modulo the reported target.
    """
    lhs_f = [p if isinstance(p, Factor) else Factor(*p) for p in product]
    rhs_f = [p if isinstance(p, Factor) else Factor(*p) for p in output]
    if K is None:
        K = default_truncation(lhs_f)
    adaptive = g_prime is None
    if adaptive:
        g_prime = default_accuracy(lhs_f + rhs_f, ctx)
    lhs = evaluate_factors(lhs_f, g_prime, K, ctx)
    rhs = evaluate_factors(rhs_f, g_prime, K, ctx)
    threshold = _max(ctx, lhs.error, rhs.error)
    if adaptive and threshold is not None and ctx.lambda_compare(threshold, g_prime) is Ordering.GREATER:
        # a higher floor only shortens the expansions, so the new error stays below it
        g_prime = threshold
        lhs = evaluate_factors(lhs_f, g_prime, K, ctx)
        rhs = evaluate_factors(rhs_f, g_prime, K, ctx)
        threshold = _max(ctx, lhs.error, rhs.error)
    if threshold is None or ctx.lambda_compare(threshold, g_prime) is not Ordering.GREATER:
        return VerifyReport(lhs.word == rhs.word, K, g_prime, threshold, lhs.word, rhs.word)
    coarse_l = kill(lhs.word, threshold, ctx)
    coarse_r = kill(rhs.word, threshold, ctx)
    if coarse_l != coarse_r:
        return VerifyReport(False, K, g_prime, threshold, lhs.word, rhs.word)
    if lhs.word == rhs.word:
        return VerifyReport(True, K, g_prime, threshold, lhs.word, rhs.word)
    raise TruncationInsufficient(
        f"images agree above the accuracy threshold {threshold} but differ below it; "
        f"raise K (now {K})", threshold)


def gen_rewrite_verify(product, output, ctx: ConstructionContext, K: int | None = None,
                       g_prime: G0Element | None = None) -> bool:
    return gen_rewrite_verify_report(product, output, ctx, K, g_prime).ok
