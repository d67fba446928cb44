import random

import pytest

from csmlap import LabeledMatrix, RingContext


@pytest.fixture
def rng():
    return random.Random(20261016)


def rand_int_matrix(rng, n, low=-9, high=9, ctx=None):
    ctx = ctx or RingContext.integers()
    return LabeledMatrix.from_rows(
        [[ctx.coerce(rng.randint(low, high)) for _ in range(n)] for _ in range(n)], ctx)
