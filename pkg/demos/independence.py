"""Independent Gen elements stay independent in the abelianized quotient A(g)."""

import itertools

from ogroup.construction import abelian_preset
from ogroup.construction.gen import parse_conjugator
from ogroup.construction.independence import abelianized_independence, bareiss_determinant, det_matrix

ctx = abelian_preset(2)

for P in range(1, 6):
    print(f"P={P} det={bareiss_determinant(det_matrix(P))}")

pool = ["1", "y1^-1", "y1^-2", "y2^-1"]
for subset in itertools.combinations(pool, 3):
    res = abelianized_independence([parse_conjugator(s, ctx) for s in subset], ctx)
    print(f"{', '.join(subset):22s} rank {res.rank}  g = {res.g}")
