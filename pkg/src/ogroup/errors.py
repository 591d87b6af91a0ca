"""Exception hierarchy shared by every module of the package."""


class OGroupError(Exception):
    """Base class for all library errors."""


class ParseError(OGroupError, ValueError):
    pass


class UnknownGenerator(ParseError):
    pass


class MalformedExponent(ParseError):
    pass


class AlphabetMismatch(OGroupError, ValueError):
    pass


class BasisNotReduced(OGroupError, ValueError):
    pass


class CapTooLarge(OGroupError, ValueError):
    pass


class NotInLayer(OGroupError, ValueError):
    pass


class WeightMismatch(OGroupError, ValueError):
    pass


class RankMismatch(OGroupError, ValueError):
    pass


class OracleUnknown(OGroupError):
    """A three-valued oracle answered Unknown where a decision was required."""


class Indeterminate(OGroupError):
    """The weight of a word exceeds the configured Magnus degree cap."""


class NotInT0(OGroupError, ValueError):
    pass


class EmptyWord(OGroupError, ValueError):
    pass


class TruncationInsufficient(OGroupError):
    """A truncated evaluation could not certify the requested accuracy."""

    def __init__(self, message, threshold=None):
        super().__init__(message)
        self.threshold = threshold
