"""The semidirect product ``G0 = F(x) x| F(b)``.

``b_j`` acts on ``F(x)`` as conjugation by ``x_j`` and ``b_{m+j}`` as
conjugation by ``x_j^-1``.  An element ``(v, w)`` stands for the product
``v(b) w(x)``, so

    (v1, w1)(v2, w2) = (v1 v2, w1^{v2} w2).
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import RankMismatch
from ..words import Alphabet, Word


def x_alphabet(m: int) -> Alphabet:
    return Alphabet.indexed("x", m)


def b_alphabet(m: int) -> Alphabet:
    return Alphabet.indexed("b", 2 * m)


def y_alphabet(m: int) -> Alphabet:
    return Alphabet.indexed("y", 2 * m)


def b_index(symbol: str) -> int:
    return int(symbol[1:])


def inner_image(v: Word, m: int) -> Word:
    """Image of a ``b``-word in ``F(x)`` under ``b_j -> x_j``, ``b_{m+j} -> x_j^-1``.

    The action of ``v`` on ``F(x)`` is conjugation by this word.
    """
    X = x_alphabet(m)
    runs = []
    for g, e in v.runs:
        j = b_index(g)
        if not 1 <= j <= 2 * m:
            raise RankMismatch(f"{g} outside b1..b{2 * m}")
        runs.append((f"x{j}", e) if j <= m else (f"x{j - m}", -e))
    return Word(tuple(runs), X)


def g0_act_b(w: Word, v: Word, m: int) -> Word:
    """``w^v`` for ``w`` in ``F(x)`` and ``v`` in ``F(b)``."""
    if w.alphabet is not None and len(w.alphabet) != m:
        raise RankMismatch(f"x-word over {len(w.alphabet)} generators, expected {m}")
    return w.conjugate(inner_image(v, m))


@dataclass(frozen=True)
class G0Element:
    v: Word
    w: Word

    def __str__(self):
        parts = [str(p) for p in (self.v, self.w) if not p.is_identity()]
        return " ".join(parts) if parts else "1"

    def is_identity(self) -> bool:
        return self.v.is_identity() and self.w.is_identity()


class G0:
    """Arithmetic in ``G0`` for a fixed rank ``m``."""

    def __init__(self, m: int):
        self.m = m
        self.X = x_alphabet(m)
        self.B = b_alphabet(m)
        self.identity = G0Element(Word.identity(self.B), Word.identity(self.X))

    def element(self, v: Word | None = None, w: Word | None = None) -> G0Element:
        return G0Element(v if v is not None else Word.identity(self.B),
                         w if w is not None else Word.identity(self.X))

    def b(self, j: int, e: int = 1) -> G0Element:
        return self.element(v=Word.gen(f"b{j}", e, self.B))

    def x(self, i: int, e: int = 1) -> G0Element:
        return self.element(w=Word.gen(f"x{i}", e, self.X))

    def mul(self, a: G0Element, c: G0Element) -> G0Element:
        return G0Element(a.v * c.v, g0_act_b(a.w, c.v, self.m) * c.w)

    def inv(self, a: G0Element) -> G0Element:
        vi = a.v.inverse()
        return G0Element(vi, g0_act_b(a.w.inverse(), vi, self.m))

    def from_word(self, word: Word) -> G0Element:
        """Evaluate a word over the ``x`` and ``b`` letters (other letters rejected)."""
        result = self.identity
        for g, e in word.runs:
            if g in self.X:
                result = self.mul(result, self.x(int(g[1:]), e))
            elif g in self.B:
                result = self.mul(result, self.b(int(g[1:]), e))
            else:
                raise RankMismatch(f"letter {g} is not in G0")
        return result
