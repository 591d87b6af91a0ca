"""Decidable stand-ins for membership in ``N``, the normal closure of the relators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from ..signs import Answer
from ..words import Alphabet, Word


def abelianize(w: Word, alphabet: Alphabet) -> tuple:
    return tuple(w.exponent_sum(g) for g in alphabet)


def hermite_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Rows of the result have strictly increasing pivot columns and positive
    pivots; entries above each pivot are reduced into ``[0, pivot)``.
    """
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis: list[list[int]] = []
    col = 0
    while rows and col < ncols:
        nonzero = [r for r in rows if r[col]]
        zero = [r for r in rows if not r[col]]
        if not nonzero:
            col += 1
            continue
        while len(nonzero) > 1:
            nonzero.sort(key=lambda r: abs(r[col]))
            pivot = nonzero[0]
            rest = []
            for r in nonzero[1:]:
                q = r[col] // pivot[col]
                r = [a - q * b for a, b in zip(r, pivot)]
                (rest if r[col] else zero).append(r)
            nonzero = [pivot] + rest
        pivot = nonzero[0]
        if pivot[col] < 0:
            pivot = [-a for a in pivot]
        basis.append(pivot)
        rows = [r for r in zero if any(r)]
        col += 1
    for i, r in enumerate(basis):
        pc = next(c for c, a in enumerate(r) if a)
        for k in range(i):
            q = basis[k][pc] // r[pc]
            if q:
                basis[k] = [a - q * b for a, b in zip(basis[k], r)]
    return basis


def lattice_reduce(vec: Sequence[int], hnf: list[list[int]]) -> tuple:
    """Canonical representative of ``vec`` modulo the lattice given in Hermite form."""
    v = list(vec)
    for r in hnf:
        pc = next(c for c, a in enumerate(r) if a)
        q = v[pc] // r[pc]
        if q:
            v = [a - q * b for a, b in zip(v, r)]
    return tuple(v)


def lattice_contains(vec: Sequence[int], hnf: list[list[int]]) -> bool:
    return not any(lattice_reduce(vec, hnf))


@dataclass(frozen=True)
class NOracle:
    decide: Callable
    kind: str  # "abelianization" or "bounded-search"

    def __call__(self, w: Word) -> Answer:
        return self.decide(w)


def n_abelianization_oracle(m: int, relators: Sequence[Word]) -> NOracle:
    """Total oracle for ``N = [F, F] * <relators>``, i.e. the kernel of ``F -> Z^m / L``.

    Only sound for relator sets whose normal closure contains the commutator
    subgroup (for instance all ``[x_i, x_j]``).
    """
    X = Alphabet.indexed("x", m)
    hnf = hermite_rows([abelianize(r, X) for r in relators])

    def decide(w: Word) -> Answer:
        return Answer.of(lattice_contains(abelianize(w, X), hnf))

    return NOracle(decide, "abelianization")


def n_bounded_search_oracle(relators: Sequence[Word], bounds: tuple[int, int] = (2, 1),
                            alphabet: Alphabet | None = None) -> NOracle:
    """Semi-decision by enumeration: products of at most ``bounds[0]`` conjugates
    of relators with conjugators of length at most ``bounds[1]``.

    Answers No when the abelianized image leaves the relator lattice, Yes when
    a product is found, and Unknown otherwise.
    """
    relators = list(relators)
    X = alphabet or relators[0].alphabet
    hnf = hermite_rows([abelianize(r, X) for r in relators])
    max_factors, max_conj = bounds
    conjugators = [Word.identity(X)]
    frontier = [Word.identity(X)]
    letters = [Word.gen(g, s, X) for g in X for s in (1, -1)]
    for _ in range(max_conj):
        frontier = [c * a for c in frontier for a in letters if len(c * a) == len(c) + 1]
        conjugators.extend(frontier)
    pieces = {r.conjugate(c) for r in relators for c in conjugators}
    pieces |= {p.inverse() for p in pieces}
    reachable = {Word.identity(X)}
    layer = {Word.identity(X)}
    for _ in range(max_factors):
        layer = {a * p for a in layer for p in pieces}
        reachable |= layer

    def decide(w: Word) -> Answer:
        if not lattice_contains(abelianize(w, X), hnf):
            return Answer.NO
        if w in reachable:
            return Answer.YES
        return Answer.UNKNOWN

    return NOracle(decide, "bounded-search")


def all_commutator_relators(m: int) -> list[Word]:
    X = Alphabet.indexed("x", m)
    gens = [Word.gen(g, 1, X) for g in X]
    out = []
    for i, j in itertools.combinations(range(m), 2):
        a, b = gens[i], gens[j]
        out.append(a.inverse() * b.inverse() * a * b)
    return out
