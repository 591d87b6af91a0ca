"""HNN extensions ``<G, t | t^-1 a t = phi(a), a in A>`` over a pluggable base group.

Elements are alternating sequences ``g0, t^e1, g1, ..., t^en, gn``.  The base
group is supplied as plain callables, membership in the associated subgroups
as three-valued oracles; any Unknown answer aborts with :class:`OracleUnknown`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import OracleUnknown
from .signs import Answer


@dataclass(frozen=True)
class HnnSpec:
    identity: Any
    multiply: Callable
    invert: Callable
    is_identity: Callable
    in_A: Callable  # base element -> Answer
    in_B: Callable
    rep_A: Callable  # representative of the right coset A g
    rep_B: Callable
    phi: Callable  # A -> B
    phi_inv: Callable


@dataclass(frozen=True)
class HnnSequence:
    base: tuple  # g0, ..., gn
    exps: tuple  # e1, ..., en  in {+1, -1}

    def __post_init__(self):
        if len(self.base) != len(self.exps) + 1:
            raise ValueError("need exactly one more base element than stable letters")
        if any(e not in (1, -1) for e in self.exps):
            raise ValueError("stable letter exponents must be +-1")

    @property
    def n(self) -> int:
        return len(self.exps)

    @classmethod
    def from_items(cls, items, spec: HnnSpec) -> "HnnSequence":
        """Build from a flat list mixing base elements and the markers ``'t'``/``'T'``."""
        base, exps = [spec.identity], []
        for item in items:
            if item == "t" or item == "T":
                exps.append(1 if item == "t" else -1)
                base.append(spec.identity)
            else:
                base[-1] = spec.multiply(base[-1], item)
        return cls(tuple(base), tuple(exps))


def _decide(answer: Answer, what: str) -> bool:
    if answer is Answer.UNKNOWN:
        raise OracleUnknown(what)
    return answer is Answer.YES


def _pinch(s: HnnSequence, i: int, spec: HnnSpec):
    """If ``t^e_i g_i t^e_{i+1}`` (1-based i) is a pinch, return its base-group value."""
    e1, e2 = s.exps[i - 1], s.exps[i]
    g = s.base[i]
    if e1 == -1 and e2 == 1 and _decide(spec.in_A(g), "membership in A"):
        return spec.phi(g)
    if e1 == 1 and e2 == -1 and _decide(spec.in_B(g), "membership in B"):
        return spec.phi_inv(g)
    return None


def is_reduced(s: HnnSequence, spec: HnnSpec) -> bool:
    return all(_pinch(s, i, spec) is None for i in range(1, s.n))


def britton_reduce(s: HnnSequence, spec: HnnSpec) -> HnnSequence:
    """Remove pinches, leftmost first, until the sequence is reduced."""
    base, exps = list(s.base), list(s.exps)
    i = 1
    while i < len(exps):
        cur = HnnSequence(tuple(base), tuple(exps))
        value = _pinch(cur, i, spec)
        if value is None:
            i += 1
            continue
        merged = spec.multiply(spec.multiply(base[i - 1], value), base[i + 1])
        base[i - 1:i + 2] = [merged]
        del exps[i - 1:i + 1]
        i = max(i - 1, 1)
    return HnnSequence(tuple(base), tuple(exps))


def normal_form(s: HnnSequence, spec: HnnSpec) -> HnnSequence:
    """Unique normal form: reduced, with coset representatives right of each letter."""
    r = britton_reduce(s, spec)
    base, exps = list(r.base), list(r.exps)
    for i in range(len(exps), 0, -1):
        g = base[i]
        if exps[i - 1] == -1:
            rep = spec.rep_A(g)
            a = spec.multiply(g, spec.invert(rep))  # in A; t^-1 a = phi(a) t^-1
            carried = spec.phi(a)
        else:
            rep = spec.rep_B(g)
            b = spec.multiply(g, spec.invert(rep))  # in B; t b = phi^-1(b) t
            carried = spec.phi_inv(b)
        base[i] = rep
        base[i - 1] = spec.multiply(base[i - 1], carried)
    return HnnSequence(tuple(base), tuple(exps))


def is_trivial(s: HnnSequence, spec: HnnSpec) -> bool:
    r = britton_reduce(s, spec)
    return r.n == 0 and spec.is_identity(r.base[0])


def insert_pinch(s: HnnSequence, position: int, a, spec: HnnSpec, inverse: bool = False) -> HnnSequence:
    """Insert ``t^-1 a t phi(a)^-1`` (or ``t b t^-1 phi^-1(b)^-1``) after base slot ``position``.

    The element of the extension is unchanged; used by invariance checks.
    """
    member = spec.in_B(a) if inverse else spec.in_A(a)
    if member is not Answer.YES:
        raise ValueError(f"{a} is not known to lie in {'B' if inverse else 'A'}")
    base, exps = list(s.base), list(s.exps)
    if not inverse:
        left, right, tail = -1, 1, spec.invert(spec.phi(a))
    else:
        left, right, tail = 1, -1, spec.invert(spec.phi_inv(a))
    base[position:position + 1] = [base[position], a, tail]
    exps[position:position] = [left, right]
    return HnnSequence(tuple(base), tuple(exps))


# --- Baumslag-Solitar groups BS(1, n) as a worked instance ---------------------

def baumslag_solitar_spec(n: int = 2) -> HnnSpec:
    """``BS(1,n) = <a, t | t^-1 a t = a^n>`` with base group ``Z = <a>`` (integers)."""
    return HnnSpec(
        identity=0,
        multiply=lambda p, q: p + q,
        invert=lambda p: -p,
        is_identity=lambda p: p == 0,
        in_A=lambda p: Answer.YES,
        in_B=lambda p: Answer.of(p % n == 0),
        rep_A=lambda p: 0,
        rep_B=lambda p: p % n,
        phi=lambda p: n * p,
        phi_inv=lambda p: p // n,
    )


def affine_image(items, n: int = 2) -> tuple[Fraction, Fraction]:
    """Faithful affine image of a BS(1,n) word, acting on the right.

    ``a: x -> x + 1`` and ``t: x -> n x``; the word maps ``x`` to ``s x + c`` and
    ``(s, c)`` is returned.  Items are integers (powers of ``a``) and
    ``'t'``/``'T'`` markers.
    """
    s, c = Fraction(1), Fraction(0)
    for item in items:
        if item == "t":
            s, c = s * n, c * n
        elif item == "T":
            s, c = s / n, c / n
        else:
            c += item
    return s, c
