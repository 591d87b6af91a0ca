import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from ogroup.construction.context import abelian_preset
from ogroup.words import Alphabet, Word

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("default")

XY = Alphabet("xy", ("x", "y"))
X3 = Alphabet.indexed("x", 3)


def words(alphabet, max_len=12):
    """Strategy for (not necessarily reduced) letter lists turned into words."""
    letters = st.tuples(st.sampled_from(list(alphabet)), st.sampled_from((1, -1)))
    return st.lists(letters, max_size=max_len).map(lambda ls: Word.from_letters(ls, alphabet))


@pytest.fixture(scope="session")
def ctx():
    return abelian_preset(2)


@pytest.fixture
def rng():
    return random.Random(12345)


def random_g0(ctx, rng, max_v=3, max_w=3):
    from ogroup.words import random_word
    v = random_word(ctx.B, rng.randint(0, max_v), rng)
    w = random_word(ctx.X, rng.randint(0, max_w), rng)
    return ctx.g0.element(v, w)


def random_lambda(ctx, rng, max_v=3, max_w=3):
    return ctx.canon(random_g0(ctx, rng, max_v, max_w))


# --- BS(1,n) words as item lists: ints are powers of a, 't'/'T' are t^{+-1} ---

def bs_inverse(items):
    out = []
    for it in reversed(items):
        out.append({"t": "T", "T": "t"}[it] if isinstance(it, str) else -it)
    return out


def bs_random(rng, length):
    return [rng.choice(("t", "T", 1, -1)) for _ in range(length)]


def bs_trivial(rng, max_len, n=2):
    """A product of conjugates of the defining relator ``t^-1 a t a^-n``."""
    relator = ["T", 1, "t", -n]
    out = []
    while len(out) < max_len - 10:
        c = bs_random(rng, rng.randint(0, 3))
        r = relator if rng.random() < 0.5 else bs_inverse(relator)
        out += bs_inverse(c) + r + c
    return out[:max_len] if len(out) <= max_len else out
