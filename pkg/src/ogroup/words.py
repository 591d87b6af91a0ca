"""Free-group words stored as run-length encoded reduced forms.

Conventions used everywhere in the package::

    w^g   = g^-1 w g
    [a,b] = a^-1 b^-1 a b

so that ``commutator(b, t) == invert(conjugate(t, b)) * t``.

Generators can be any hashable object.  Words over a named, finite
:class:`Alphabet` come out of :func:`parse_word`; words whose generators are
produced by a computation (for instance the conjugates ``t^f`` spanning the
normal closure of ``t``) carry ``alphabet=None``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import AlphabetMismatch, BasisNotReduced, MalformedExponent, UnknownGenerator

Generator = Hashable


@dataclass(frozen=True)
class Alphabet:
    name: str
    symbols: tuple

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"repeated symbol in alphabet {self.name}")

    @classmethod
    def indexed(cls, prefix: str, count: int) -> "Alphabet":
        return cls(prefix, tuple(f"{prefix}{i}" for i in range(1, count + 1)))

    def __contains__(self, symbol):
        return symbol in self.symbols

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def index(self, symbol) -> int:
        return self.symbols.index(symbol)

    def __add__(self, other: "Alphabet") -> "Alphabet":
        return Alphabet(f"{self.name}+{other.name}", self.symbols + other.symbols)


def _reduce_runs(runs: Iterable[tuple]) -> tuple:
    out: list = []
    for gen, e in runs:
        if e == 0:
            continue
        if out and out[-1][0] == gen:
            total = out[-1][1] + e
            if total:
                out[-1] = (gen, total)
            else:
                out.pop()
        else:
            out.append((gen, e))
    return tuple(out)


@dataclass(frozen=True)
class Word:
    runs: tuple = ()
    alphabet: Alphabet | None = None

    def __post_init__(self):
        object.__setattr__(self, "runs", _reduce_runs(self.runs))

    # construction -------------------------------------------------------
    @classmethod
    def identity(cls, alphabet: Alphabet | None = None) -> "Word":
        return cls((), alphabet)

    @classmethod
    def gen(cls, symbol, exponent: int = 1, alphabet: Alphabet | None = None) -> "Word":
        if alphabet is not None and symbol not in alphabet:
            raise UnknownGenerator(symbol)
        return cls(((symbol, exponent),), alphabet)

    @classmethod
    def from_letters(cls, letters: Iterable[tuple], alphabet: Alphabet | None = None) -> "Word":
        return cls(tuple(letters), alphabet)

    # inspection ----------------------------------------------------------
    def __len__(self):
        return sum(abs(e) for _, e in self.runs)

    def __bool__(self):
        return bool(self.runs)

    def is_identity(self) -> bool:
        return not self.runs

    def letters(self) -> list:
        """Expanded letter list ``[(gen, +-1), ...]``."""
        out = []
        for g, e in self.runs:
            s = 1 if e > 0 else -1
            out.extend([(g, s)] * abs(e))
        return out

    def generators(self) -> set:
        return {g for g, _ in self.runs}

    def exponent_sum(self, gen) -> int:
        return sum(e for g, e in self.runs if g == gen)

    def first_letter(self):
        if not self.runs:
            return None
        g, e = self.runs[0]
        return (g, 1 if e > 0 else -1)

    def last_letter(self):
        if not self.runs:
            return None
        g, e = self.runs[-1]
        return (g, 1 if e > 0 else -1)

    # arithmetic ------------------------------------------------------------
    def _check(self, other: "Word"):
        if (self.alphabet is not None and other.alphabet is not None
                and self.alphabet != other.alphabet):
            raise AlphabetMismatch(f"{self.alphabet.name} vs {other.alphabet.name}")
        return self.alphabet if self.alphabet is not None else other.alphabet

    def __mul__(self, other: "Word") -> "Word":
        alphabet = self._check(other)
        out = list(self.runs)
        for gen, e in other.runs:
            if out and out[-1][0] == gen:
                total = out[-1][1] + e
                if total:
                    out[-1] = (gen, total)
                else:
                    out.pop()
            else:
                out.append((gen, e))
        w = Word.__new__(Word)
        object.__setattr__(w, "runs", tuple(out))
        object.__setattr__(w, "alphabet", alphabet)
        return w

    def inverse(self) -> "Word":
        w = Word.__new__(Word)
        object.__setattr__(w, "runs", tuple((g, -e) for g, e in reversed(self.runs)))
        object.__setattr__(w, "alphabet", self.alphabet)
        return w

    def __invert__(self):
        return self.inverse()

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        result = Word.identity(self.alphabet)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self, g: "Word") -> "Word":
        """``self^g = g^-1 self g``."""
        return g.inverse() * self * g

    def substitute(self, images, alphabet: Alphabet | None = None) -> "Word":
        """Apply the endomorphism sending each generator ``x`` to ``images(x)``."""
        result = Word.identity(alphabet)
        cache: dict = {}
        for g, e in self.runs:
            if g not in cache:
                cache[g] = images(g)
            result = result * (cache[g] ** e)
        return result

    def map_generators(self, fn, alphabet: Alphabet | None = None) -> "Word":
        """Rename generators (the map need not be injective)."""
        return Word(tuple((fn(g), e) for g, e in self.runs), alphabet)

    def __str__(self):
        return format_word(self)


def parse_word(text: str, alphabet: Alphabet) -> Word:
    """Parse whitespace separated tokens ``name``, ``name^k`` or ``1``."""
    runs = []
    for token in text.split():
        if token == "1":
            continue
        name, caret, exp = token.partition("^")
        if name not in alphabet:
            raise UnknownGenerator(f"unknown generator {name!r} in {text!r}")
        if caret:
            if not re.fullmatch(r"[+-]?\d+", exp) or int(exp) == 0:
                raise MalformedExponent(f"bad exponent in token {token!r}")
            runs.append((name, int(exp)))
        else:
            runs.append((name, 1))
    return Word(tuple(runs), alphabet)


def format_word(w: Word) -> str:
    if not w.runs:
        return "1"
    return " ".join(str(g) if e == 1 else f"{g}^{e}" for g, e in w.runs)


def _same(a: Word, b: Word):
    return a._check(b)


def multiply(a: Word, b: Word) -> Word:
    return a * b


def invert(a: Word) -> Word:
    return a.inverse()


def conjugate(w: Word, g: Word) -> Word:
    _same(w, g)
    return w.conjugate(g)


def commutator(a: Word, b: Word) -> Word:
    _same(a, b)
    return a.inverse() * b.inverse() * a * b


def cyclic_reduce(w: Word) -> Word:
    letters = w.letters()
    i, j = 0, len(letters) - 1
    while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
        i += 1
        j -= 1
    return Word.from_letters(letters[i:j + 1], w.alphabet)


def are_conjugate(a: Word, b: Word) -> bool:
    """Conjugacy test in a free group: compare cyclic reductions up to rotation."""
    ca, cb = cyclic_reduce(a).letters(), cyclic_reduce(b).letters()
    if len(ca) != len(cb):
        return False
    if not ca:
        return True
    doubled = ca + ca
    n = len(cb)
    return any(doubled[k:k + n] == cb for k in range(len(ca)))


def random_word(alphabet: Alphabet | Sequence, length: int, rng: random.Random) -> Word:
    """Uniformly random freely reduced word of exactly ``length`` letters."""
    symbols = list(alphabet)
    letters: list = []
    while len(letters) < length:
        g = rng.choice(symbols)
        s = rng.choice((1, -1))
        if letters and letters[-1] == (g, -s):
            continue
        letters.append((g, s))
    return Word.from_letters(letters, alphabet if isinstance(alphabet, Alphabet) else None)


# --- Nielsen reduction -------------------------------------------------------

def _half_key(w: Word):
    letters = w.letters()
    half = (len(letters) + 1) // 2
    return tuple((repr(g), s) for g, s in letters[:half])


def _nielsen_key(w: Word):
    a, b = _half_key(w), _half_key(w.inverse())
    return (len(w), min(a, b), max(a, b))


def nielsen_reduce(gens: Sequence[Word]) -> list[Word]:
    """Nielsen-reduced generating tuple of the subgroup spanned by ``gens``.

    Elementary transformations replace a generator by ``u^a v^b`` or
    ``v^b u^a`` whenever that strictly lowers the well-order
    (length, smaller half, larger half); identities and duplicates are dropped.
    """
    basis = [g for g in gens if not g.is_identity()]
    changed = True
    while changed:
        changed = False
        basis = [g for g in basis if not g.is_identity()]
        for i in range(len(basis)):
            for j in range(len(basis)):
                if i == j:
                    continue
                v, u = basis[i], basis[j]
                best = _nielsen_key(v)
                best_word = None
                for a in (1, -1):
                    ua = u if a == 1 else u.inverse()
                    for b in (1, -1):
                        vb = v if b == 1 else v.inverse()
                        for cand in (ua * vb, vb * ua):
                            if cand.is_identity():
                                key = (0,)
                            else:
                                key = _nielsen_key(cand)
                            if key < best:
                                best, best_word = key, cand
                if best_word is not None:
                    basis[i] = best_word
                    changed = True
                    break
            if changed:
                break
    return basis


def is_nielsen_reduced(basis: Sequence[Word]) -> bool:
    """Checks N0 (no identity), N1 on pairs and N2 on triples of basis letters.

    N1: ``|uv| >= max(|u|, |v|)`` whenever ``uv != 1``;
    N2: ``|uvw| > |u| - |v| + |w|`` whenever ``uv != 1`` and ``vw != 1``.
    """
    if any(u.is_identity() for u in basis):
        return False
    symbols = list(basis) + [u.inverse() for u in basis]
    for u in symbols:
        for v in symbols:
            uv = u * v
            if uv.is_identity():
                continue
            if len(uv) < max(len(u), len(v)):
                return False
            for w in symbols:
                if (v * w).is_identity():
                    continue
                if len(uv * w) <= len(u) - len(v) + len(w):
                    return False
    return True


def member_of_subgroup(w: Word, basis: Sequence[Word], strict: bool = False) -> bool:
    """Decide whether ``w`` lies in the subgroup generated by ``basis``.

    With a Nielsen-reduced basis, in any reduced product ``y1 ... yn`` at least
    the first ``ceil(|y1|/2)`` letters of ``y1`` survive as a prefix, and every
    factor leaves a letter behind, so a prefix-pruned search of depth ``|w|``
    is complete.  A non-reduced basis is reduced first unless ``strict``.
    """
    basis = list(basis)
    if not is_nielsen_reduced(basis):
        if strict:
            raise BasisNotReduced("basis fails the Nielsen length conditions")
        basis = nielsen_reduce(basis)
    symbols = basis + [b.inverse() for b in basis]
    prefixes = [(y, y.letters()[: (len(y) + 1) // 2]) for y in symbols]

    seen: set = set()

    def search(rest: Word, budget: int) -> bool:
        if rest.is_identity():
            return True
        if budget == 0 or (rest, budget) in seen:
            return False
        seen.add((rest, budget))
        letters = rest.letters()
        for y, pre in prefixes:
            if letters[: len(pre)] == pre:
                if search(y.inverse() * rest, budget - 1):
                    return True
        return False

    return search(w, max(len(w), 1))
