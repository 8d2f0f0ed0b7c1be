import random
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def fractions(bound=10, max_den=6):
    return st.builds(lambda n, d: Fraction(n, d), st.integers(-bound * max_den, bound * max_den),
                     st.integers(1, max_den)).filter(lambda x: abs(x) <= bound)


@pytest.fixture
def rng():
    return random.Random(20261015)


def seeded_rngs():
    return st.integers(0, 2**32 - 1).map(random.Random)
