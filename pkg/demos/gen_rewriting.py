"""Rewrite t-conjugates into Gen and check the identity by truncated evaluation."""

from ogroup.construction import abelian_preset
from ogroup.construction.gen import Factor, gen_rewrite, gen_rewrite_verify_report, parse_conjugator

ctx = abelian_preset(2)

for text in ["y1", "y1^-1 b1", "y2 y1^-1 b1^-1 b2", "y1 y1 b3 x1"]:
    c = parse_conjugator(text, ctx)
    out = gen_rewrite([Factor(1, c)], ctx)
    rep = gen_rewrite_verify_report([Factor(1, c)], out.factors, ctx)
    print(f"t^({text})")
    for step in out.trace:
        print(f"    {step.rule:8s} on {step.source}")
    print("  =", " ".join(str(f) for f in out.factors))
    print(f"  verified={rep.ok} at K={rep.K}")
