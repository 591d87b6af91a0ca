"""In G1 the stable letter t commutes with w exactly when w lies in N.

The preset uses m = 2 and relators [x1, x2], so N is the commutator subgroup.
"""

from ogroup.construction import abelian_preset
from ogroup.words import commutator

ctx = abelian_preset(2)
t = ctx.parse("t")

for text in ["x1^-1 x2^-1 x1 x2", "x1", "x2 x1 x2^-1 x1^-1", "x1^2 x2 x1^-2 x2^-1", "b1"]:
    w = ctx.parse(text)
    print(f"{text:24s} [t,w] = 1: {ctx.g1_is_trivial(commutator(t, w))}")
