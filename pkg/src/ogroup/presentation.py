"""Line-oriented presentation files and the context they wire up.

Recognised lines (``#`` starts a comment)::

    alphabet x 2          rank m of F(x); fixes b and y at 2m
    alphabet b 4          optional, must equal 2m
    alphabet y 4          optional, must equal 2m
    relator x1 x2 x1^-1 x2^-1
    oracle abelian        or: oracle search [factors conjugator-length]
    truncation 8
    cap 8
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import ParseError
from .words import are_conjugate, parse_word
from .construction.context import (DEFAULT_TRUNCATION, ConstructionContext, abelian_context,
                                   search_context)
from .construction.g0 import x_alphabet
from .construction.oracles import all_commutator_relators

ENV_VAR = "OGROUP_PRESENTATION"


@dataclass
class Presentation:
    m: int = 2
    relators: list = field(default_factory=list)
    oracle: str = "abelian"
    bounds: tuple = (2, 1)
    truncation: int = DEFAULT_TRUNCATION
    cap: int = 8

    def context(self, truncation: int | None = None, cap: int | None = None) -> ConstructionContext:
        truncation = truncation or self.truncation
        cap = cap or self.cap
        if self.oracle == "search":
            if not self.relators:
                raise ParseError("the search oracle needs at least one relator")
            return search_context(self.m, self.relators, self.bounds, truncation, cap)
        relators = self.relators or all_commutator_relators(self.m)
        _check_abelian(self.m, relators)
        return abelian_context(self.m, relators, truncation=truncation, cap=cap)


def _check_abelian(m: int, relators) -> None:
    # sound only when the normal closure is exactly [F, F]
    for c in all_commutator_relators(m):
        if not any(are_conjugate(c, r) or are_conjugate(c, r.inverse()) for r in relators):
            raise ParseError(f"oracle abelian needs every [x_i,x_j] among the relators; missing {c}")
    try:
        abelian_context(m, relators)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_presentation(text: str) -> Presentation:
    p = Presentation()
    seen_x = False
    sizes: dict = {}
    raw_relators = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        try:
            if key == "alphabet":
                name, count = rest.split()
                if name not in ("x", "b", "y"):
                    raise ParseError(f"unknown alphabet {name!r}")
                sizes[name] = int(count)
                if name == "x":
                    seen_x = True
                    p.m = int(count)
            elif key == "relator":
                raw_relators.append(rest)
            elif key == "oracle":
                parts = rest.split()
                if parts[0] not in ("abelian", "search"):
                    raise ParseError(f"unknown oracle {parts[0]!r}")
                p.oracle = parts[0]
                if len(parts) == 3:
                    p.bounds = (int(parts[1]), int(parts[2]))
            elif key == "truncation":
                p.truncation = int(rest)
            elif key == "cap":
                p.cap = int(rest)
            else:
                raise ParseError(f"unknown directive {key!r}")
        except (ValueError, IndexError) as exc:
            if isinstance(exc, ParseError):
                raise ParseError(f"line {lineno}: {exc}") from exc
            raise ParseError(f"line {lineno}: cannot read {raw.strip()!r}") from exc
    if not seen_x and raw_relators:
        raise ParseError("relators given without an 'alphabet x' line")
    if p.m < 1:
        raise ParseError("the x alphabet needs at least one letter")
    for name in ("b", "y"):
        if name in sizes and sizes[name] != 2 * p.m:
            raise ParseError(f"alphabet {name} must have 2m = {2 * p.m} letters")
    if p.truncation < 1 or p.cap < 1:
        raise ParseError("truncation and cap must be positive")
    X = x_alphabet(p.m)
    p.relators = [parse_word(r, X) for r in raw_relators]
    return p


def load_presentation(path: str | os.PathLike | None = None) -> Presentation:
    """Read ``path``, else the file named by ``OGROUP_PRESENTATION``, else the abelian preset."""
    path = path or os.environ.get(ENV_VAR)
    if not path:
        return Presentation()
    return parse_presentation(Path(path).read_text())
