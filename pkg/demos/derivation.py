"""Derive [t, u^w] = 1 from the finite relation set, one conjugation at a time."""

from ogroup.construction import abelian_preset
from ogroup.construction.relations import derive_relation, verify_derivation

ctx = abelian_preset(2)
trace = derive_relation(1, ctx.parse("x1 x2^-1"), ctx)

print("start:", trace.axiom)
for step in trace.steps:
    kinds = sorted({f.relation for f in step.factors})
    print(f"{step.action:22s} {len(step.factors):3d} factors using {', '.join(kinds)}")
print("end:  ", trace.relator)
print("verified:", verify_derivation(trace, ctx))
