"""Deriving ``[t, u_j^w] = 1`` from the finite relation set, with checkable certificates.

Relation families, all as relator words over ``x, b, t, y``:

* ``d5``  ``x_i^{b_j} (x_i^{x_j})^-1`` and ``x_i^{b_{m+j}} (x_i^{x_j^-1})^-1``
* ``d1``  ``[x_i, y_j]``
* ``d2``  ``[b_i, y_j]``
* ``d3``  ``t^{y_i} [b_i, t]^-1``
* ``d4``  ``[t, u_j]``

Every derivation step records its relator ``R`` together with a certificate:
a list of factors ``(r^sign)^s`` whose free product is exactly ``R``, each
``r`` being an instance of a family above or a relator established earlier.
Conjugation by ``b_j`` acts on ``x``-words as conjugation by ``x_j``, so one
pass of ``y_k`` then ``b_k^-1`` appends ``x_k^-1`` to ``w`` for ``k <= m`` and
``x_{k-m}`` for ``k > m``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..words import Word, commutator, cyclic_reduce
from .context import ConstructionContext


@dataclass(frozen=True)
class CertificateFactor:
    relation: str  # "d1".."d5" or "hyp"
    instance: Word
    sign: int
    conjugator: Word

    def value(self) -> Word:
        r = self.instance if self.sign == 1 else self.instance.inverse()
        return r.conjugate(self.conjugator)


@dataclass
class DerivationStep:
    action: str
    relator: Word
    factors: list


@dataclass
class DerivationTrace:
    j: int
    w: Word
    axiom: Word
    steps: list = field(default_factory=list)

    @property
    def relator(self) -> Word:
        return self.steps[-1].relator if self.steps else self.axiom

    def __len__(self):
        return len(self.steps)


# --- relation instances --------------------------------------------------------

def _letter(ctx, g, e=1) -> Word:
    return Word.gen(g, e, ctx.full)


def relator_word(ctx: ConstructionContext, j: int) -> Word:
    u = ctx.relators[j - 1]
    return Word(u.runs, ctx.full)


def target_relator(ctx: ConstructionContext, j: int, w: Word) -> Word:
    """``[t, u_j^w]``."""
    u = relator_word(ctx, j).conjugate(Word(w.runs, ctx.full))
    return commutator(_letter(ctx, "t"), u)


def _instances(ctx: ConstructionContext) -> dict:
    cached = getattr(ctx, "_relation_instances", None)
    if cached is not None:
        return cached
    m = ctx.m
    x = [_letter(ctx, f"x{i}") for i in range(1, m + 1)]
    b = [_letter(ctx, f"b{i}") for i in range(1, 2 * m + 1)]
    y = [_letter(ctx, f"y{i}") for i in range(1, 2 * m + 1)]
    t = _letter(ctx, "t")
    fam = {"d1": set(), "d2": set(), "d3": set(), "d4": set(), "d5": set()}
    for xi in x:
        for j in range(m):
            fam["d5"].add(xi.conjugate(b[j]) * xi.conjugate(x[j]).inverse())
            fam["d5"].add(xi.conjugate(b[m + j]) * xi.conjugate(x[j].inverse()).inverse())
        for yj in y:
            fam["d1"].add(commutator(xi, yj))
    for bi in b:
        for yj in y:
            fam["d2"].add(commutator(bi, yj))
    for bi, yi in zip(b, y):
        fam["d3"].add(t.conjugate(yi) * commutator(bi, t).inverse())
    for j in range(1, len(ctx.relators) + 1):
        fam["d4"].add(commutator(t, relator_word(ctx, j)))
    ctx._relation_instances = fam
    return fam


def _conjugator_between(u: Word, r: Word):
    """``(sign, s)`` with ``u = s^-1 r^sign s`` in the free group, or None."""
    for sign in (1, -1):
        rr = r if sign == 1 else r.inverse()
        cu, cr = cyclic_reduce(u), cyclic_reduce(rr)
        a = _peel(u, cu)
        c = _peel(rr, cr)
        lu, lr = cu.letters(), cr.letters()
        if len(lu) != len(lr):
            continue
        n = len(lr)
        for k in range(max(n, 1)):
            if lr[k:] + lr[:k] == lu:
                p = Word.from_letters(lr[:k], u.alphabet)
                s = c.inverse() * p * a
                if rr.conjugate(s) == u:
                    return sign, s
    return None


def _peel(w: Word, core: Word) -> Word:
    # w = a^-1 core a; recover a from the prefix length
    k = (len(w) - len(core)) // 2
    return Word.from_letters(w.letters()[len(w) - k:], w.alphabet)


class _Builder:
    """Tracks ``W = product of certificate factors`` under elementary moves."""

    def __init__(self, ctx: ConstructionContext, hypothesis: Word):
        self.ctx = ctx
        self.factors = [CertificateFactor("hyp", hypothesis, 1, Word.identity(ctx.full))]
        self.word = hypothesis

    def conjugate(self, c: Word):
        self.factors = [CertificateFactor(f.relation, f.instance, f.sign, f.conjugator * c)
                        for f in self.factors]
        self.word = self.word.conjugate(c)

    def invert(self):
        self.factors = [CertificateFactor(f.relation, f.instance, -f.sign, f.conjugator)
                        for f in reversed(self.factors)]
        self.word = self.word.inverse()

    def replace(self, A: Word, L: Word, R: Word, B: Word, relation: str, instance: Word):
        """``A L B -> A R B`` where ``L^-1 R`` is conjugate to ``instance^+-1``."""
        assert A * L * B == self.word, "subword split does not match the current word"
        found = _conjugator_between(L.inverse() * R, instance)
        assert found is not None, f"{relation} instance does not justify the move"
        sign, s = found
        self.factors.append(CertificateFactor(relation, instance, sign, s * B))
        self.word = A * R * B


def _drop_y(bld: _Builder, ctx, U: Word, y: Word, prefix: Word, suffix: Word) -> None:
    """In ``prefix . y^-1 U y . suffix`` move ``y`` through ``U`` with d1; returns ``U``."""
    done = Word.identity(ctx.full)
    letters = U.letters()
    for pos, (g, e) in enumerate(letters):
        a = _letter(ctx, g, e)
        rest = Word.from_letters(letters[pos + 1:], ctx.full)
        A = prefix * done
        B = rest.conjugate(y) * suffix
        bld.replace(A, y.inverse() * a * y, a, B, "d1", _d1(ctx, g, y))
        done = done * a


def _d1(ctx, g, y):
    return commutator(_letter(ctx, g), y)


def _d5(ctx, i: int, k: int) -> Word:
    m = ctx.m
    xi = _letter(ctx, f"x{i}")
    bk = _letter(ctx, f"b{k}")
    xj = _letter(ctx, f"x{(k - 1) % m + 1}")
    if k > m:
        xj = xj.inverse()
    return xi.conjugate(bk) * xi.conjugate(xj).inverse()


def _conjugate_letter(bld: _Builder, ctx, a: Word, k: int, P: Word, Q: Word):
    """Rewrite ``P . b_k a b_k^-1 . Q`` to ``P . a^z . Q`` with three d5 moves."""
    b = _letter(ctx, f"b{k}")
    z = _x_of(ctx, k)
    g = a.first_letter()[0]
    c = int(z.first_letter()[0][1:])
    bld.replace(P * b * z.inverse(), z * a * z.inverse(), b.inverse() * a * b, z * b.inverse() * Q,
                "d5", _d5(ctx, int(g[1:]), k))
    bld.replace(P, b * z.inverse() * b.inverse(), z.inverse(), a * b * z * b.inverse() * Q,
                "d5", _d5(ctx, c, k))
    bld.replace(P * z.inverse() * a, b * z * b.inverse(), z, Q, "d5", _d5(ctx, c, k))


def _append_letter(trace: DerivationTrace, ctx: ConstructionContext, U: Word, k: int) -> Word:
    """Extend ``[t, U]`` to ``[t, U^{b_k^-1}]`` in two recorded steps; returns the new ``U``."""
    t = _letter(ctx, "t")
    y = _letter(ctx, f"y{k}")
    b = _letter(ctx, f"b{k}")
    H = trace.relator
    one = Word.identity(ctx.full)

    # step 1: conjugate by y_k, clear y from U, rewrite t^y by d3, commute t past U
    bld = _Builder(ctx, H)
    bld.conjugate(y)
    ty, Ui = t.conjugate(y), U.inverse()
    # y^-1 t^-1 U^-1 t U y  ==  (t^y)^-1 . (U^-1)^y . t^y . U^y  freely
    _drop_y(bld, ctx, Ui, y, ty.inverse(), ty * U.conjugate(y))
    _drop_y(bld, ctx, U, y, ty.inverse() * Ui * ty, one)
    d3 = t.conjugate(y) * commutator(b, t).inverse()
    bt = commutator(b, t)
    bld.replace(ty.inverse() * Ui, ty, bt, U, "d3", d3)
    bld.replace(one, ty.inverse(), bt.inverse(), Ui * bt * U, "d3", d3)
    # now [b,t]^-1 U^-1 b^-1 t^-1 b t U; use the hypothesis to swap t U
    head = bt.inverse() * Ui * b.inverse() * t.inverse() * b
    bld.replace(head, t * U, U * t, one, "hyp", H)
    bld.conjugate(t.inverse())
    trace.steps.append(DerivationStep(f"conjugate by y{k}", bld.word, bld.factors))

    # step 2: conjugate by b_k^-1 and rewrite each b a b^-1 inside U^{b^-1} with d5
    bld = _Builder(ctx, bld.word)
    bld.conjugate(b.inverse())
    # word is t (b U^-1 b^-1) t^-1 (b U b^-1)
    blocks = [Ui, U]
    for which in (0, 1):
        done = one
        letters = blocks[which].letters()
        for pos, (g, e) in enumerate(letters):
            a = _letter(ctx, g, e)
            rest = Word.from_letters(letters[pos + 1:], ctx.full).conjugate(b.inverse())
            if which == 0:
                P, Q = t * done, rest * t.inverse() * U.conjugate(b.inverse())
            else:
                P, Q = t * blocks[0] * t.inverse() * done, rest
            _conjugate_letter(bld, ctx, a, k, P, Q)
            done = done * _x_image(ctx, a, k)
        blocks[which] = done
    V = U.conjugate(_x_of(ctx, k))
    bld.conjugate(t)
    bld.invert()
    trace.steps.append(DerivationStep(f"conjugate by b{k}^-1", bld.word, bld.factors))
    assert bld.word == commutator(t, V)
    return V


def _x_of(ctx, k: int) -> Word:
    """The ``x``-word whose conjugation agrees with conjugation by ``b_k^-1``."""
    m = ctx.m
    c = (k - 1) % m + 1
    return _letter(ctx, f"x{c}", -1 if k <= m else 1)


def _x_image(ctx, a: Word, k: int) -> Word:
    return a.conjugate(_x_of(ctx, k))


def derive_relation(j: int, w: Word, ctx: ConstructionContext) -> DerivationTrace:
    """Trace deriving ``[t, u_j^w] = 1`` from the finite relations, two steps per letter of ``w``."""
    if not 1 <= j <= len(ctx.relators):
        raise ValueError(f"relator index {j} out of range 1..{len(ctx.relators)}")
    w = Word(w.runs, ctx.full)
    if any(g not in ctx.X for g, _ in w.runs):
        raise ValueError("w must be a word in the x letters")
    U = relator_word(ctx, j)
    trace = DerivationTrace(j, w, commutator(_letter(ctx, "t"), U))
    for g, e in w.letters():
        c = int(g[1:])
        k = ctx.m + c if e == 1 else c
        U = _append_letter(trace, ctx, U, k)
    return trace


def verify_derivation(trace: DerivationTrace, ctx: ConstructionContext) -> bool:
    """Replay a trace: every certificate multiplies out to its relator, every factor is a
    relation instance or an earlier relator, and the last relator is ``[t, u_j^w]``."""
    fam = _instances(ctx)
    if trace.axiom not in fam["d4"] or trace.axiom != commutator(_letter(ctx, "t"),
                                                                  relator_word(ctx, trace.j)):
        return False
    known = [trace.axiom]
    for step in trace.steps:
        total = Word.identity(ctx.full)
        for f in step.factors:
            if f.relation == "hyp":
                if f.instance not in known:
                    return False
            elif f.instance not in fam.get(f.relation, ()):
                return False
            total = total * f.value()
        if total != step.relator:
            return False
        known.append(step.relator)
    return trace.relator == target_relator(ctx, trace.j, trace.w)
