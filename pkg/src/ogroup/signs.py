from enum import Enum, IntEnum


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    def __neg__(self):
        return Sign(-int(self))

    @classmethod
    def of(cls, value):
        return cls((value > 0) - (value < 0))


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class Answer(Enum):
    """Three-valued oracle answer."""

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, flag):
        return cls.YES if flag else cls.NO
