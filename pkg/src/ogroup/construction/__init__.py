"""The groups ``G0``, ``G1``, the free group ``T0`` and the endomorphisms ``y_i``."""

from .context import (ConstructionContext, abelian_context, abelian_preset, check_in_t0,
                      search_context)
from .g0 import G0, G0Element
from .gen import (Conjugator, Factor, gen_rewrite, gen_rewrite_verify,
                  gen_rewrite_verify_report, is_gen, parse_conjugator)
from .independence import abelianized_independence, bareiss_determinant, det_matrix, integer_rank
from .oracles import NOracle, n_abelianization_oracle, n_bounded_search_oracle
from .relations import DerivationTrace, derive_relation, verify_derivation
from .t0 import (cauchy_c, cg_member, g1_sign, kill, t0_collect, t0_compare, t0_sign,
                 witness_g, y_apply, y_inverse_approx)

__all__ = [
    "ConstructionContext", "abelian_context", "abelian_preset", "check_in_t0", "search_context",
    "G0", "G0Element", "Conjugator", "Factor", "gen_rewrite", "gen_rewrite_verify",
    "gen_rewrite_verify_report", "is_gen", "parse_conjugator", "abelianized_independence",
    "bareiss_determinant", "det_matrix", "integer_rank", "NOracle", "n_abelianization_oracle",
    "n_bounded_search_oracle", "DerivationTrace", "derive_relation", "verify_derivation",
    "cauchy_c", "cg_member", "g1_sign", "kill", "t0_collect", "t0_compare", "t0_sign",
    "witness_g", "y_apply", "y_inverse_approx",
]
