"""Linear independence of Gen elements in the abelianized quotients ``A(g)``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import TruncationInsufficient
from ..signs import Ordering
from .context import ConstructionContext
from .g0 import G0Element
from .gen import Factor, evaluate_factors


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix, fraction-free."""
    a = [list(r) for r in rows if any(r)]
    if not a:
        return 0
    ncols = len(a[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(a)) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, len(a)):
            for c in range(col + 1, ncols):
                a[r][c] = (a[r][c] * p - a[r][col] * a[rank][c]) // prev
            a[r][col] = 0
        prev = p
        rank += 1
        if rank == len(a):
            break
    return rank


def det_matrix(P: int) -> list[list[int]]:
    """``a[k][p]`` for ``1 <= k, p <= P``: ``a_{k,1} = 1``, ``a_{k,p+1} = sum_{l<=k} a_{l,p}``."""
    if P < 1:
        raise ValueError("P must be >= 1")
    cols = [[1] * P]
    for _ in range(1, P):
        prev, acc, col = cols[-1], 0, []
        for k in range(P):
            acc += prev[k]
            col.append(acc)
        cols.append(col)
    return [[cols[p][k] for p in range(P)] for k in range(P)]


def coefficient_matrix(rows: int, columns: Sequence[int], offset: int = 0) -> list[list[int]]:
    """Entries ``a_{offset+l, p}`` for ``l = 1..rows`` and ``p`` in ``columns``."""
    need = max(max(columns), offset + rows)
    full = det_matrix(need)
    return [[full[offset + l][p - 1] for p in columns] for l in range(rows)]


@dataclass
class IndependenceResult:
    g: G0Element
    rank: int
    full_rank: bool
    K: int
    vectors: list


def abelianized_independence(gens: Sequence[Factor], ctx: ConstructionContext,
                             K: int | None = None) -> IndependenceResult:
    """Rank of the images of distinct Gen elements in ``A(g)``.

    ``g`` lies below ``b_i^{2N}`` for every ``i``, with ``N > 2 sum len(v_s)``.
    Each generator is evaluated modulo ``C(g)`` by truncated ``y^-1``
    substitution and abelianized; the rank of the exponent vectors is exact.
    """
    gens = [p if isinstance(p, Factor) else Factor(1, p) for p in gens]
    N = 2 * sum(len(p.conj.v) for p in gens) + 1
    g = ctx.lambda_min([ctx.b_power(i, 2 * N + 1) for i in range(1, 2 * ctx.m + 1)])
    auto = K is None
    K = K if K is not None else 2 * N
    if K < 2 * N and not auto:
        raise TruncationInsufficient(f"K={K} below 2N={2 * N}")
    while True:
        images, error = [], None
        for p in gens:
            ev = evaluate_factors([Factor(1, p.conj)], g, K, ctx)
            images.append(ev.word)
            if ev.error is not None and (error is None or
                                         ctx.lambda_compare(ev.error, error) is Ordering.GREATER):
                error = ev.error
        if error is None or ctx.lambda_compare(error, g) is not Ordering.GREATER:
            break
        if not auto:
            raise TruncationInsufficient(f"truncation K={K} leaves terms above {g}", error)
        K *= 2
    support = ctx.lambda_sorted({f for w in images for f in w.generators()})
    vectors = [[w.exponent_sum(f) for f in support] for w in images]
    rank = integer_rank(vectors)
    return IndependenceResult(g, rank, rank == len(gens), K, vectors)
