"""Command-line front end.

Every subcommand prints records.  In the default ``lines`` mode each record is
one line of ``key=value`` pairs (values with spaces are shell-quoted); ``human``
mode prints one ``key: value`` per line and a blank line between records.

Exit codes: 0 success, 1 other library errors, 2 parse or argument errors,
3 an oracle answered Unknown, 4 indeterminate weight or insufficient truncation.
"""

from __future__ import annotations

import argparse
import random
import shlex
import sys
from dataclasses import dataclass
from typing import Callable

from . import hnn, magnus
from .errors import Indeterminate, OGroupError, OracleUnknown, ParseError, TruncationInsufficient
from .presentation import ENV_VAR, load_presentation
from .signs import Answer, Ordering, Sign
from .words import Alphabet, Word, commutator, format_word, parse_word, random_word
from .construction import gen as genmod
from .construction import independence, relations, t0
from .construction.context import ConstructionContext

ORDERS = ("g0-right", "g0-bi", "fx-right", "fx-scc", "fb", "g1", "t0")


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ParseError):
        return 2
    if isinstance(exc, OracleUnknown):
        return 3
    if isinstance(exc, (Indeterminate, TruncationInsufficient)):
        return 4
    if isinstance(exc, OGroupError):
        return 1
    if isinstance(exc, ValueError):
        return 2
    raise exc


@dataclass
class CliConfig:
    presentation: str | None
    command: str
    output: str = "lines"
    truncation: int | None = None
    cap: int | None = None
    samples: int = 200


# --- formatting ----------------------------------------------------------------

def _text(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (Sign, Ordering, Answer)):
        return value.name.lower()
    if isinstance(value, Word):
        return format_word(value)
    return str(value)


def t0_text(w: Word) -> str:
    if w.is_identity():
        return "1"
    parts = []
    for f, e in w.runs:
        parts.append(f"t^({f})" if e == 1 else f"t^({f})^{e}")
    return " ".join(parts)


def emit(records: list, mode: str, out=None) -> None:
    out = out or sys.stdout
    for i, rec in enumerate(records):
        if mode == "human":
            if i:
                print(file=out)
            for k, v in rec.items():
                print(f"{k}: {_text(v)}", file=out)
        else:
            print(" ".join(f"{k}={shlex.quote(_text(v))}" for k, v in rec.items()), file=out)


def _tree_text(tree) -> str:
    if isinstance(tree, tuple):
        return "[" + ",".join(_tree_text(t) for t in tree) + "]"
    return str(tree)


def _seq_text(seq: hnn.HnnSequence, base_text: Callable) -> str:
    parts = [f"({base_text(seq.base[0])})"]
    for e, g in zip(seq.exps, seq.base[1:]):
        parts.append("t" if e == 1 else "t^-1")
        parts.append(f"({base_text(g)})")
    return " ".join(parts)


# --- subcommands -----------------------------------------------------------------

def _gens(args, ctx) -> Alphabet:
    if args.gens:
        return Alphabet("custom", tuple(g.strip() for g in args.gens.split(",") if g.strip()))
    return ctx.X


def cmd_reduce(args, ctx):
    alphabet = _gens(args, ctx) if args.gens else ctx.full
    return [{"word": parse_word(args.word, alphabet)}]


def _order_parts(order: str, ctx: ConstructionContext):
    """Parser, sign function, multiply and invert for one of the named orders."""
    g0 = ctx.g0
    if order in ("g0-right", "g0-bi"):
        sign = ctx.g0_right if order == "g0-right" else ctx.g0_bi
        return (lambda s: g0.from_word(ctx.parse(s))), sign, g0.mul, g0.inv
    if order in ("fx-right", "fx-scc"):
        sign = ctx.fx if order == "fx-right" else ctx.fx_bi
        return ctx.parse_x, sign, Word.__mul__, Word.inverse
    if order == "fb":
        return ctx.parse_b, ctx.fb, Word.__mul__, Word.inverse
    if order == "g1":
        return ctx.parse, (lambda w: t0.g1_sign(w, ctx)), Word.__mul__, Word.inverse
    return ((lambda s: t0.t0_collect(ctx.parse(s), ctx)), (lambda w: t0.t0_sign(w, ctx)),
            Word.__mul__, Word.inverse)


def cmd_compare(args, ctx):
    parse, sign, mul, inv = _order_parts(args.order, ctx)
    u, v = parse(args.u), parse(args.v)
    s = sign(mul(v, inv(u)))
    result = {Sign.POSITIVE: Ordering.LESS, Sign.ZERO: Ordering.EQUAL,
              Sign.NEGATIVE: Ordering.GREATER}[s]
    return [{"order": result}]


def _hnn_setup(args, ctx):
    if args.group == "bs":
        spec = hnn.baumslag_solitar_spec(args.n)
        word = parse_word(args.word, Alphabet("bs", ("a", "t")))
        items = []
        for g, e in word.runs:
            if g == "a":
                items.append(e)
            else:
                items.extend(["t" if e > 0 else "T"] * abs(e))
        seq = hnn.HnnSequence.from_items(items, spec)
        return spec, seq, (lambda p: format_word(Word((("a", p),))))
    spec = ctx.g1_spec()
    return spec, ctx.g1_sequence(ctx.parse(args.word)), str


def cmd_britton(args, ctx):
    spec, seq, base_text = _hnn_setup(args, ctx)
    r = hnn.britton_reduce(seq, spec)
    trivial = r.n == 0 and spec.is_identity(r.base[0])
    return [{"reduced": _seq_text(r, base_text), "stable_letters": r.n, "trivial": trivial}]


def cmd_normal_form(args, ctx):
    spec, seq, base_text = _hnn_setup(args, ctx)
    return [{"normal_form": _seq_text(hnn.normal_form(seq, spec), base_text)}]


def cmd_hall_basis(args, ctx):
    alphabet = _gens(args, ctx)
    out = []
    for i, b in enumerate(magnus.lyndon_basis(alphabet.symbols, args.k), 1):
        word = "".join(str(alphabet.symbols[j]) for j in b.lyndon)
        out.append({"index": i, "lyndon": word, "bracket": _tree_text(b.tree)})
    return out


def cmd_magnus(args, ctx):
    alphabet = _gens(args, ctx)
    cap = max(args.degree or 0, ctx.cap)
    w = parse_word(args.word, alphabet)
    wt = magnus.weight(w, cap, alphabet.symbols)
    if wt is magnus.INDETERMINATE:
        raise Indeterminate(f"no nonzero Magnus component up to degree {cap}")
    shown = args.degree or (1 if wt is magnus.TRIVIAL else wt)
    series = magnus.magnus_expand(w, shown, alphabet.symbols)
    rec = {"weight": "trivial" if wt is magnus.TRIVIAL else wt, "series": series.pretty()}
    if wt is not magnus.TRIVIAL:
        basis = magnus.lyndon_basis(alphabet.symbols, wt)
        rec["basis"] = " ".join(_tree_text(b.tree) for b in basis)
        rec["coordinates"] = " ".join(map(str, magnus.lie_coordinates(series, wt, basis)))
    return [rec]


def cmd_sign_g1(args, ctx):
    return [{"sign": t0.g1_sign(ctx.parse(args.word), ctx)}]


def cmd_sign_t0(args, ctx):
    w = t0.t0_collect(ctx.parse(args.word), ctx)
    rec = {"t0": t0_text(w), "sign": t0.t0_sign(w, ctx)}
    if not w.is_identity():
        rec["witness"] = t0.witness_g(w, ctx)
    return [rec]


def cmd_collect(args, ctx):
    return [{"t0": t0_text(t0.t0_collect(ctx.parse(args.word), ctx))}]


def cmd_gen_rewrite(args, ctx):
    c = genmod.parse_conjugator(args.conjugator, ctx)
    res = genmod.gen_rewrite([genmod.Factor(1, c)], ctx)
    out = [{"factor": i, "sign": f"{f.sign:+d}", "conjugator": str(f.conj)}
           for i, f in enumerate(res.factors, 1)]
    summary = {"factors": len(res.factors), "steps": len(res.trace)}
    if args.verify:
        rep = genmod.gen_rewrite_verify_report([genmod.Factor(1, c)], res.factors, ctx,
                                              K=args.K or args.truncation)
        summary.update({"verified": rep.ok, "K": rep.K, "accuracy": rep.g_prime})
    out.append(summary)
    return out


def cmd_indep(args, ctx):
    gens = [genmod.Factor(1, genmod.parse_conjugator(s, ctx)) for s in args.gens]
    res = independence.abelianized_independence(gens, ctx, K=args.K or args.truncation)
    return [{"rank": res.rank, "full_rank": res.full_rank, "size": len(gens),
             "g": res.g, "K": res.K}]


def cmd_det_matrix(args, ctx):
    if args.P < 1:
        raise ValueError("P must be >= 1")
    a = independence.det_matrix(args.P)
    out = []
    if args.output == "human":
        out = [{"row": " ".join(map(str, row))} for row in a]
    out.append({"det": independence.bareiss_determinant(a)})
    return out


def cmd_derive(args, ctx):
    w = ctx.parse_x(args.word)
    trace = relations.derive_relation(args.j, w, ctx)
    out = [{"step": 0, "action": f"axiom [t,u{args.j}]", "relator": trace.axiom}]
    for i, s in enumerate(trace.steps, 1):
        out.append({"step": i, "action": s.action, "factors": len(s.factors), "relator": s.relator})
    out.append({"steps": len(trace), "verified": relations.verify_derivation(trace, ctx)})
    return out


def _word_problem(w: Word, ctx: ConstructionContext):
    answer = ctx.in_N(w)
    if answer is Answer.UNKNOWN:
        return None, answer
    t = Word.gen("t", 1, ctx.letters)
    commutes = ctx.g1_is_trivial(commutator(t, Word(w.runs, ctx.letters)))
    return commutes, answer


def cmd_demo_wordproblem(args, ctx):
    w = ctx.parse_x(args.word)
    commutes, answer = _word_problem(w, ctx)
    if commutes is None:
        emit([{"in_N": answer}], args.output)
        raise OracleUnknown(f"membership of {format_word(w)} in N is undecided")
    return [{"commutes": commutes, "in_N": answer}]


def cmd_check_wordproblem(args, ctx):
    rng = random.Random(args.seed)
    disagreements = 0
    for _ in range(args.samples):
        w = random_word(ctx.X, rng.randint(0, args.length), rng)
        commutes, answer = _word_problem(w, ctx)
        if commutes is None:
            raise OracleUnknown(f"membership of {format_word(w)} in N is undecided")
        disagreements += commutes != (answer is Answer.YES)
    return [{"samples": args.samples, "disagreements": disagreements}]


# --- argument parsing ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ogroup", description=__doc__.split("\n\n")[0])
    p.add_argument("--presentation", "-p",
                   help=f"presentation file (default: ${ENV_VAR}, else the abelian preset, m=2)")
    p.add_argument("--output", "-o", choices=("lines", "human"), default="lines")
    p.add_argument("--truncation", type=_positive, help="override the truncation level K")
    p.add_argument("--cap", type=_positive, help="override the Magnus weight cap")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("reduce", cmd_reduce, "freely reduce a word")
    sp.add_argument("word")
    sp.add_argument("--gens", help="comma separated generators (default x, b, t, y)")

    sp = add("compare", cmd_compare, "compare two elements in a chosen order")
    sp.add_argument("u")
    sp.add_argument("v")
    sp.add_argument("--order", choices=ORDERS, default="g0-right")

    for name, fn in (("britton", cmd_britton), ("normal-form", cmd_normal_form)):
        sp = add(name, fn, f"{name.replace('-', ' ')} in an HNN extension")
        sp.add_argument("word")
        sp.add_argument("--group", choices=("g1", "bs"), default="g1",
                        help="g1 over the presentation, or BS(1,n) on letters a, t")
        sp.add_argument("--n", type=_positive, default=2)

    sp = add("hall-basis", cmd_hall_basis, "Lyndon basis of a lower central layer")
    sp.add_argument("k", type=_positive)
    sp.add_argument("--gens")

    sp = add("magnus", cmd_magnus, "Magnus expansion, weight and Lie coordinates")
    sp.add_argument("word")
    sp.add_argument("--gens")
    sp.add_argument("--degree", type=_positive, help="degree of the printed series (default: the weight)")

    for name, fn, help_text in (("sign-g1", cmd_sign_g1, "sign in the order on G1"),
                                ("sign-t0", cmd_sign_t0, "sign of a T0 element"),
                                ("collect", cmd_collect, "rewrite as a product of t-conjugates")):
        sp = add(name, fn, help_text)
        sp.add_argument("word")

    sp = add("gen-rewrite", cmd_gen_rewrite, "rewrite t^(alpha v f) into Gen")
    sp.add_argument("conjugator")
    sp.add_argument("--verify", action="store_true")
    sp.add_argument("--K", type=_positive)

    sp = add("indep", cmd_indep, "rank of Gen elements in the abelianized quotient")
    sp.add_argument("gens", nargs="+", help="conjugators, e.g. 1 'y1^-1'")
    sp.add_argument("--K", type=_positive)

    sp = add("det-matrix", cmd_det_matrix, "the coefficient matrix and its determinant")
    sp.add_argument("P", type=int)

    sp = add("derive", cmd_derive, "derive [t, u_j^w] = 1 from the finite relations")
    sp.add_argument("j", type=_positive)
    sp.add_argument("word")

    sp = add("demo-wordproblem", cmd_demo_wordproblem, "decide whether [t, w] = 1 in G1")
    sp.add_argument("word")

    sp = add("check-wordproblem", cmd_check_wordproblem,
             "compare [t, w] = 1 with membership in N on random words")
    sp.add_argument("--samples", type=_positive, default=200)
    sp.add_argument("--length", type=_positive, default=20)
    sp.add_argument("--seed", type=int, default=0)
    return p


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = CliConfig(args.presentation, args.command, args.output, args.truncation, args.cap,
                       getattr(args, "samples", CliConfig.samples))
    try:
        ctx = load_presentation(config.presentation).context(config.truncation, config.cap)
        emit(args.fn(args, ctx), config.output)
    except (OGroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exit_code_for(exc)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
