"""Lower central series of free groups via the truncated Magnus expansion.

A word is mapped into the ring of noncommutative power series with integer
coefficients by ``g -> 1 + X_g``.  The first nonzero homogeneous component of
``M(w) - 1`` sits in degree ``k`` exactly when ``w`` lies in ``gamma_k`` but
not ``gamma_{k+1}``, and that component is a Lie polynomial.  Writing it over
the Lyndon basis (standard bracketing of Lyndon words) gives integer
coordinates of the class of ``w`` in ``gamma_k / gamma_{k+1}``.

Monomials are tuples of generator indices into the alphabet tuple the series
was built over; index order is the generator order used for Lyndon words.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import CapTooLarge, NotInLayer, WeightMismatch
from .signs import Ordering
from .words import Word

DEFAULT_CAP = 8
MAX_CAP = 16


class Weight(enum.Enum):
    TRIVIAL = "trivial"
    INDETERMINATE = "indeterminate"


TRIVIAL = Weight.TRIVIAL
INDETERMINATE = Weight.INDETERMINATE


@dataclass
class TruncatedSeries:
    alphabet: tuple
    cap: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    def component(self, degree: int) -> dict:
        return {m: c for m, c in self.terms.items() if len(m) == degree}

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        cap = min(self.cap, other.cap)
        out: dict = {}
        for m1, c1 in self.terms.items():
            d1 = len(m1)
            for m2, c2 in other.terms.items():
                if d1 + len(m2) > cap:
                    continue
                key = m1 + m2
                out[key] = out.get(key, 0) + c1 * c2
        return TruncatedSeries(self.alphabet, cap, out)

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries) and self.cap == other.cap
                and self.terms == other.terms)

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[m]
            mono = "".join(f"X[{self.alphabet[i]}]" for i in m) or "1"
            parts.append(f"{c:+d}*{mono}" if mono != "1" else f"{c:+d}")
        return " ".join(parts)


def _power_coefficients(e: int, cap: int) -> list[int]:
    """Coefficients of ``(1+X)^e`` up to degree ``cap``."""
    if e > 0:
        return [comb(e, j) for j in range(cap + 1)]
    n = -e
    return [(-1) ** j * comb(n + j - 1, j) for j in range(cap + 1)]


def _resolve_alphabet(w: Word, alphabet) -> tuple:
    if alphabet is not None:
        return tuple(alphabet)
    if w.alphabet is not None:
        return tuple(w.alphabet.symbols)
    seen: list = []
    for g, _ in w.runs:
        if g not in seen:
            seen.append(g)
    return tuple(seen)


def magnus_expand(w: Word, cap: int, alphabet: Sequence | None = None,
                  max_cap: int = MAX_CAP) -> TruncatedSeries:
    """Image of ``w`` under ``g -> 1 + X_g`` truncated above degree ``cap``."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if cap > max_cap:
        raise CapTooLarge(f"cap {cap} exceeds guard {max_cap}")
    alpha = _resolve_alphabet(w, alphabet)
    index = {g: i for i, g in enumerate(alpha)}
    terms: dict = {(): 1}
    for g, e in w.runs:
        gi = index[g]
        coeffs = _power_coefficients(e, cap)
        new: dict = {}
        for mono, c in terms.items():
            room = cap - len(mono)
            for j in range(room + 1):
                cj = coeffs[j]
                if cj:
                    key = mono + (gi,) * j
                    new[key] = new.get(key, 0) + c * cj
        terms = {k: v for k, v in new.items() if v}
    return TruncatedSeries(alpha, cap, terms)


def weight(w: Word, cap: int = DEFAULT_CAP, alphabet: Sequence | None = None):
    """Index ``s`` with ``w`` in ``gamma_s \\ gamma_{s+1}``.

    Returns :data:`TRIVIAL` for the identity and :data:`INDETERMINATE` when no
    nonzero component appears up to ``cap``.
    """
    if w.is_identity():
        return TRIVIAL
    alpha = _resolve_alphabet(w, alphabet)
    sums: dict = {}
    for g, e in w.runs:
        sums[g] = sums.get(g, 0) + e
    if any(sums.values()):
        return 1
    for k in range(2, cap + 1):
        series = magnus_expand(w, k, alpha, max_cap=max(cap, MAX_CAP))
        if series.component(k):
            return k
    return INDETERMINATE


# --- Lyndon words and the Lyndon basis of the free Lie ring ------------------

def lyndon_words(n: int, k: int) -> list[tuple]:
    """Lyndon words of length ``k`` over ``0..n-1`` in lexicographic order (Duval)."""
    out = []
    if n == 0:
        return out
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        if m == k:
            out.append(tuple(w))
        while len(w) < k:
            w.append(w[len(w) - m])
        while w and w[-1] == n - 1:
            w.pop()
    return out


def is_lyndon(word: tuple) -> bool:
    n = len(word)
    return n > 0 and all(word < word[i:] for i in range(1, n))


def standard_factorization(word: tuple) -> tuple[tuple, tuple]:
    """Split a Lyndon word as ``u v`` with ``v`` its longest proper Lyndon suffix."""
    for i in range(1, len(word)):
        if is_lyndon(word[i:]):
            return word[:i], word[i:]
    raise ValueError("letters have no standard factorization")


@lru_cache(maxsize=None)
def bracket_tree(word: tuple):
    if len(word) == 1:
        return word[0]
    u, v = standard_factorization(word)
    return (bracket_tree(u), bracket_tree(v))


def _poly_bracket(p: dict, q: dict) -> dict:
    out: dict = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            out[m1 + m2] = out.get(m1 + m2, 0) + c1 * c2
            out[m2 + m1] = out.get(m2 + m1, 0) - c1 * c2
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _lyndon_poly_items(word: tuple) -> tuple:
    if len(word) == 1:
        return (((word[0],), 1),)
    u, v = standard_factorization(word)
    return tuple(sorted(_poly_bracket(dict(_lyndon_poly_items(u)),
                                      dict(_lyndon_poly_items(v))).items()))


def lyndon_polynomial(word: tuple) -> dict:
    """Expansion of the standard bracketing of a Lyndon word (index letters)."""
    return dict(_lyndon_poly_items(tuple(word)))


@dataclass(frozen=True)
class BasisCommutator:
    weight: int
    tree: object
    content: tuple  # ((generator, multiplicity), ...) in alphabet order
    lyndon: tuple = ()  # index word, empty for trees not built from Lyndon words

    @classmethod
    def from_tree(cls, tree) -> "BasisCommutator":
        """Wrap an arbitrary bracket tree; tuples of length > 2 are left-normed."""
        counts: dict = {}
        order: list = []

        def walk(node):
            if isinstance(node, tuple):
                for child in node:
                    walk(child)
            else:
                if node not in counts:
                    order.append(node)
                counts[node] = counts.get(node, 0) + 1

        walk(tree)
        return cls(sum(counts.values()), tree, tuple((g, counts[g]) for g in order))


def lyndon_basis(alphabet: Sequence, k: int) -> list[BasisCommutator]:
    """Ordered Lyndon basis of the weight-``k`` layer of the free Lie ring."""
    if k < 1:
        raise ValueError("k must be >= 1")
    alpha = tuple(alphabet)
    basis = []
    for lw in lyndon_words(len(alpha), k):
        tree = _map_tree(bracket_tree(lw), alpha)
        counts: dict = {}
        for i in lw:
            counts[i] = counts.get(i, 0) + 1
        content = tuple((alpha[i], counts[i]) for i in sorted(counts))
        basis.append(BasisCommutator(k, tree, content, lw))
    return basis


def _map_tree(tree, alpha):
    if isinstance(tree, tuple):
        return tuple(_map_tree(t, alpha) for t in tree)
    return alpha[tree]


def witt_dimension(n: int, k: int) -> int:
    """Rank of ``gamma_k / gamma_{k+1}`` of the free group of rank ``n``."""
    total = 0
    for d in range(1, k + 1):
        if k % d == 0:
            total += _mobius(d) * n ** (k // d)
    return total // k


def _mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def lie_coordinates_dict(component: dict) -> dict:
    """Coordinates of a homogeneous Lie polynomial over Lyndon words.

    Back-substitution: the lexicographically least surviving monomial is the
    leading word of exactly one basis polynomial, whose coefficient it equals.
    """
    rest = dict(component)
    coords: dict = {}
    while rest:
        lead = min(rest)
        c = rest[lead]
        if not is_lyndon(lead):
            raise NotInLayer(f"component is not a Lie polynomial (monomial {lead})")
        coords[lead] = c
        for m, a in lyndon_polynomial(lead).items():
            v = rest.get(m, 0) - c * a
            if v:
                rest[m] = v
            else:
                rest.pop(m, None)
    return coords


def lie_coordinates(series: TruncatedSeries, k: int,
                    basis: Sequence[BasisCommutator] | None = None) -> list[int]:
    """Integer coordinates of the class in ``gamma_k/gamma_{k+1}`` over ``basis``."""
    for d in range(1, k):
        if series.component(d):
            raise NotInLayer(f"degree-{d} component survives")
    if k > series.cap:
        raise NotInLayer(f"series truncated at {series.cap} < {k}")
    if basis is None:
        basis = lyndon_basis(series.alphabet, k)
    coords = lie_coordinates_dict(series.component(k))
    vector = []
    for b in basis:
        if not b.lyndon:
            raise ValueError("basis elements must come from lyndon_basis")
        vector.append(coords.pop(b.lyndon, 0))
    if any(coords.values()):
        raise ValueError("basis does not span the component")
    return vector


# --- the s-monomial ordering of basic commutators ------------------------------

def _rank_map(generator_order: Sequence) -> dict:
    return {g: i for i, g in enumerate(generator_order)}


def s_monomial(c, generator_order: Sequence) -> tuple:
    """Content of a commutator as ``((f1, n1), (f2, n2), ...)`` with f1 > f2 > ...

    ``generator_order`` lists generators from least to greatest.
    """
    if not isinstance(c, BasisCommutator):
        c = BasisCommutator.from_tree(c)
    rank = _rank_map(generator_order)
    return tuple(sorted(c.content, key=lambda gm: rank[gm[0]], reverse=True))


def s_key(c, generator_order: Sequence) -> tuple:
    """Generator ranks with multiplicity, sorted decreasingly."""
    rank = _rank_map(generator_order)
    out = []
    for g, n in s_monomial(c, generator_order):
        out.extend([rank[g]] * n)
    return tuple(out)


def compare_s(a, b, generator_order: Sequence) -> Ordering:
    a = a if isinstance(a, BasisCommutator) else BasisCommutator.from_tree(a)
    b = b if isinstance(b, BasisCommutator) else BasisCommutator.from_tree(b)
    if a.weight != b.weight:
        raise WeightMismatch(f"weights {a.weight} and {b.weight}")
    ka, kb = s_key(a, generator_order), s_key(b, generator_order)
    return Ordering((ka > kb) - (ka < kb))


def lyndon_order_key(lw: tuple) -> tuple:
    """Total order on same-weight Lyndon words over index letters.

    Primary key is the decreasingly sorted content (the s-monomial); equal
    contents are broken by the Lyndon word itself.
    """
    return (tuple(sorted(lw, reverse=True)), lw)
