import random

import pytest


def make_word(rng: random.Random, length: int) -> str:
    return "".join(rng.choice("abcd") for _ in range(length))


def make_even_word(rng: random.Random, length: int) -> str:
    from grigor.words import reduce_word

    while True:
        w = reduce_word(make_word(rng, length))
        if not w.count("a") & 1:
            return w


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
