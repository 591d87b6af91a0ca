"""Free groups, HNN extensions, orders and an orderable finitely presented construction."""

from .errors import (Indeterminate, OGroupError, OracleUnknown, ParseError,
                     TruncationInsufficient)
from .signs import Answer, Ordering, Sign
from .words import Alphabet, Word, commutator, parse_word

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "Word", "parse_word", "commutator", "Sign", "Ordering", "Answer",
    "OGroupError", "ParseError", "OracleUnknown", "Indeterminate", "TruncationInsufficient",
]
