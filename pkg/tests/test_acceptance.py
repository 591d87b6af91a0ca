"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import itertools
import random
import time

import pytest

from ogroup.construction.gen import (Conjugator, Factor, default_truncation, gen_rewrite,
                                     gen_rewrite_verify_report, is_gen, parse_conjugator)
from ogroup.construction.independence import abelianized_independence, bareiss_determinant, det_matrix
from ogroup.construction.relations import derive_relation, verify_derivation
from ogroup.construction.t0 import cauchy_c, cg_member, shift, t0_sign, t_gen, witness_g, y_apply
from ogroup.errors import TruncationInsufficient
from ogroup.hnn import HnnSequence, affine_image, baumslag_solitar_spec, insert_pinch, is_trivial, normal_form
from ogroup.magnus import lie_coordinates, lyndon_basis, magnus_expand, weight
from ogroup.signs import Answer, Sign
from ogroup.words import Alphabet, Word, commutator, random_word

from conftest import bs_random, bs_trivial, random_lambda


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\nacceptance {number:2d} {'PASS' if ok else 'FAIL'}  {title}  {detail}")
        assert ok, f"criterion {number} failed: {detail}"
    return emit


def _items(s):
    out = [s.base[0]]
    for e, g in zip(s.exps, s.base[1:]):
        out += ["t" if e == 1 else "T", g]
    return out


def test_01_hnn_oracle_equivalence(report):
    spec = baumslag_solitar_spec(2)
    rng = random.Random(101)
    start = time.perf_counter()
    bad = 0
    for k in range(1000):
        # half the corpus is built trivial, otherwise almost nothing would be
        items = bs_trivial(rng, 40) if k % 2 else bs_random(rng, rng.randint(0, 40))
        s = HnnSequence.from_items(items, spec)
        if is_trivial(s, spec) != (affine_image(items) == (1, 0)):
            bad += 1
        nf = normal_form(s, spec)
        if normal_form(nf, spec) != nf:
            bad += 1
        inverse = bool(rng.getrandbits(1))
        value = rng.randint(-5, 5) * (2 if inverse else 1)  # B is generated by a^2
        bumped = insert_pinch(s, rng.randint(0, s.n), value, spec, inverse=inverse)
        if normal_form(bumped, spec) != nf or affine_image(_items(bumped)) != affine_image(items):
            bad += 1
    elapsed = time.perf_counter() - start
    report(1, "HNN oracle equivalence on BS(1,2)", bad == 0 and elapsed < 5,
           f"violations={bad} time={elapsed:.2f}s")


def test_02_commuting_with_t_iff_in_N(ctx, report):
    rng = random.Random(102)
    t = ctx.parse("t")
    start = time.perf_counter()
    bad = 0
    for k in range(1000):
        w = random_word(ctx.X, rng.randint(0, 30), rng)
        if k % 2:
            # push half the corpus into N by cancelling the exponent sums
            fix = Word(tuple((g, -w.exponent_sum(g)) for g in ctx.X if w.exponent_sum(g)), ctx.X)
            w = w * fix
        expected = ctx.in_N(w) is Answer.YES
        if ctx.g1_is_trivial(commutator(t, Word(w.runs, ctx.letters))) != expected:
            bad += 1
    elapsed = time.perf_counter() - start
    report(2, "[t,w] = 1 in G1 iff w in N", bad == 0 and elapsed < 10,
           f"disagreements={bad} time={elapsed:.2f}s")


def test_03_coefficient_determinant(report):
    start = time.perf_counter()
    ok = True
    for P in range(1, 9):
        a = det_matrix(P)
        ok &= bareiss_determinant(a) == 1
        ok &= [row[1] for row in a] == list(range(1, P + 1)) if P > 1 else a == [[1]]
    elapsed = time.perf_counter() - start
    report(3, "det(a_lp) = 1 for P = 1..8", ok and elapsed < 1, f"time={elapsed:.3f}s")


def test_04_order_axioms(ctx, rng, report):
    from conftest import random_g0
    g0 = ctx.g0
    bad = 0
    for _ in range(500):
        f, g, h = (random_g0(ctx, rng) for _ in range(3))
        for sign in (ctx.g0_right, ctx.g0_bi):
            s = sign(f)
            if (s is Sign.ZERO) != f.is_identity():
                bad += 1
            if sign(g0.inv(f)) is not -s:
                bad += 1
        # f < g iff g f^-1 > 1, and right multiplication by h preserves it
        before = ctx.g0_right(g0.mul(g, g0.inv(f)))
        after = ctx.g0_right(g0.mul(g0.mul(g, h), g0.inv(g0.mul(f, h))))
        bad += before is not after
    for _ in range(500):
        f, c = random_g0(ctx, rng), random_g0(ctx, rng)
        bad += ctx.g0_bi(g0.mul(g0.mul(g0.inv(c), f), c)) is not ctx.g0_bi(f)
        u = random_word(ctx.X, rng.randint(0, 8), rng)
        v = random_word(ctx.X, rng.randint(0, 6), rng)
        bad += ctx.fx_bi(u.conjugate(v)) is not ctx.fx_bi(u)
        u = random_word(ctx.B, rng.randint(0, 8), rng)
        v = random_word(ctx.B, rng.randint(0, 6), rng)
        bad += ctx.fb(u.conjugate(v)) is not ctx.fb(u)
    report(4, "order axioms on G0, F(x), F(b)", bad == 0, f"violations={bad}")


def _random_t0(ctx, rng, length):
    runs = [(random_lambda(ctx, rng, 2, 2), rng.choice((1, -1))) for _ in range(rng.randint(1, length))]
    w = Word.from_letters(runs)
    return w if not w.is_identity() else t_gen(ctx.identity)


def test_05_t0_sign_invariance(ctx, report):
    rng = random.Random(105)
    start = time.perf_counter()
    bad = 0
    for _ in range(500):
        w, v = _random_t0(ctx, rng, 4), _random_t0(ctx, rng, 4)
        f = random_lambda(ctx, rng)
        s = t0_sign(w, ctx)
        bad += t0_sign(w.conjugate(v), ctx) is not s
        bad += t0_sign(shift(w, f, ctx), ctx) is not s
    elapsed = time.perf_counter() - start
    report(5, "t0_sign invariant under T0 and Lambda conjugation", bad == 0 and elapsed < 60,
           f"violations={bad} time={elapsed:.2f}s")


def test_06_convexity(ctx, report):
    rng = random.Random(106)
    samples = bad = 0
    while samples < 200:
        h = _random_t0(ctx, rng, 4)
        top = witness_g(h, ctx)
        g = rng.choice([top, ctx.lambda_max([top, random_lambda(ctx, rng)])])
        pool = list(h.generators()) + [random_lambda(ctx, rng) for _ in range(2)]
        runs = [(rng.choice(pool), rng.choice((1, -1))) for _ in range(rng.randint(1, 4))]
        u = Word.from_letters(runs)
        if u.is_identity() or t0_sign(u, ctx) is not Sign.POSITIVE:
            continue
        if t0_sign(h * u.inverse(), ctx) is not Sign.POSITIVE:
            continue
        samples += 1
        bad += not cg_member(u, g, ctx)
    report(6, "C(g) is convex in T0", bad == 0, f"samples={samples} violations={bad}")


def test_07_cauchy_identity(ctx, report):
    rng = random.Random(107)
    bad = 0
    for _ in range(50):
        g, i = random_lambda(ctx, rng), rng.randint(1, 2 * ctx.m)
        for k in range(11):
            expected = Word(((ctx.b_power(i, k + 1, g), -1), (g, 1)))
            bad += y_apply(cauchy_c(g, i, k, ctx), i, ctx) != expected
    report(7, "y_i(c_k(g,i)) = t^-(b_i^(k+1) g) t^g", bad == 0, f"violations={bad}")


def test_08_gen_rewrite(ctx, report):
    rng = random.Random(108)
    start = time.perf_counter()
    bad = escalations = failures = 0
    for _ in range(500):
        c = Conjugator(random_word(ctx.Y, rng.randint(0, 6), rng),
                       random_word(ctx.B, rng.randint(0, 6), rng),
                       random_word(ctx.X, rng.randint(0, 2), rng))
        product = [Factor(1, c)]
        out = gen_rewrite(product, ctx)
        for step in out.trace:
            bad += not all(p.conj.measure() < step.source.measure() for p in step.produced)
        bad += not all(is_gen(p.conj, ctx) for p in out.factors)
        try:
            rep = gen_rewrite_verify_report(product, out.factors, ctx)
        except TruncationInsufficient:
            failures += 1
            continue
        escalations += rep.K != default_truncation(product)
        failures += not rep.ok
    elapsed = time.perf_counter() - start
    report(8, "Gen rewriting terminates, lands in Gen and verifies",
           bad == 0 and escalations == 0 and failures == 0,
           f"violations={bad} escalations={escalations} failures={failures} time={elapsed:.1f}s")


def test_09_independence(ctx, report):
    pool = [parse_conjugator(s, ctx) for s in ("1", "y1^-1", "y1^-2", "y2^-1")]
    start = time.perf_counter()
    deficient = [subset for n in (2, 3) for subset in itertools.combinations(pool, n)
                 if not abelianized_independence(list(subset), ctx).full_rank]
    elapsed = time.perf_counter() - start
    report(9, "abelianized independence of small Gen subsets", not deficient and elapsed < 30,
           f"subsets=10 deficient={len(deficient)} time={elapsed:.2f}s")


def test_10_derivations(ctx, report):
    letters = [Word.gen(g, e, ctx.full) for g in ctx.X for e in (1, -1)]
    ball = {Word.identity(ctx.full)}
    frontier = set(ball)
    for _ in range(3):
        frontier = {w * a for w in frontier for a in letters if len(w * a) == len(w) + 1}
        ball |= frontier
    rejected = sum(not verify_derivation(derive_relation(j, w, ctx), ctx)
                   for j in range(1, len(ctx.relators) + 1) for w in ball)
    report(10, "derivations of [t, u^w] verify on the length-3 ball", rejected == 0,
           f"words={len(ball)} rejected={rejected}")


# --- an independent model of F(a,b)/gamma_4 by collection ----------------------

# generators g1=a, g2=b, g3=[b,a], g4=[g3,a], g5=[g3,b]; layer of each
LAYER = (1, 1, 2, 3, 3)
# CONJ[(j, i, s)] is g_j^(g_i^s) as a list of (generator, exponent), for j > i
CONJ = {
    (1, 0, 1): [(1, 1), (2, 1)], (1, 0, -1): [(1, 1), (2, -1), (3, 1)],
    (2, 0, 1): [(2, 1), (3, 1)], (2, 0, -1): [(2, 1), (3, -1)],
    (2, 1, 1): [(2, 1), (4, 1)], (2, 1, -1): [(2, 1), (4, -1)],
}


def _collect_letter(vec, i, s):
    """Right-multiply the collected word ``vec`` by ``g_i^s``."""
    tail = [(j, vec[j]) for j in range(i + 1, 5) if vec[j]]
    for j, _ in tail:
        vec[j] = 0
    vec[i] += s
    for j, e in tail:
        image = CONJ.get((j, i, s), [(j, 1)])
        if e < 0:
            image = [(g, -x) for g, x in reversed(image)]
        for _ in range(abs(e)):
            for g, x in image:
                for _ in range(abs(x)):
                    _collect_letter(vec, g, 1 if x > 0 else -1)


def collect(w: Word):
    vec = [0] * 5
    for g, e in w.letters():
        _collect_letter(vec, "ab".index(g), e)
    return vec


def test_collector_sanity():
    ab = Alphabet("ab", ("a", "b"))
    a, b = Word.gen("a", 1, ab), Word.gen("b", 1, ab)
    assert collect(commutator(b, a)) == [0, 0, 1, 0, 0]
    assert collect(commutator(commutator(b, a), b)) == [0, 0, 0, 0, 1]
    assert collect(a * b * a.inverse() * b.inverse() * b * a * b.inverse() * a.inverse()) == [0] * 5


def _nq_coordinates(vec):
    """Layer and Lyndon coordinates ((a,b); (aab, abb)) from collected exponents."""
    for layer in (1, 2, 3):
        part = [e for e, l in zip(vec, LAYER) if l == layer]
        if any(part):
            if layer == 1:
                return 1, part
            if layer == 2:
                return 2, [-part[0]]  # [b,a] = -[a,b]
            return 3, [part[0], -part[1]]  # [[b,a],a] = [a,[a,b]], [[b,a],b] = -[[a,b],b]
    return None, []


def test_11_magnus_against_nilpotent_quotient(report):
    ab = Alphabet("ab", ("a", "b"))
    gens = [Word.gen(g, e, ab) for g in ab for e in (1, -1)]
    words = list(gens)
    words += [commutator(x, y) for x in gens for y in gens]
    words += [commutator(commutator(x, y), z) for x in gens for y in gens for z in gens]
    words += [commutator(z, commutator(x, y)) for x in gens for y in gens for z in gens]
    checked = bad = 0
    for w in words:
        layer, coords = _nq_coordinates(collect(w))
        if layer is None:
            continue  # trivial below gamma_4: not a weight <= 3 element
        checked += 1
        if weight(w, 4, ("a", "b")) != layer:
            bad += 1
            continue
        series = magnus_expand(w, layer, ("a", "b"))
        bad += lie_coordinates(series, layer, lyndon_basis(("a", "b"), layer)) != coords
    report(11, "Lie coordinates match collection in F/gamma_4", bad == 0 and checked > 0,
           f"words={checked} mismatches={bad}")
