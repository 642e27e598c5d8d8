import random

import pytest

from thompson_twist.dyadic import Dyadic


@pytest.fixture
def rng():
    return random.Random(20240601)


@pytest.fixture
def gen_f():
    from thompson_twist.plmap import validate_f

    return validate_f([(0, 0), (1, 2)], 0, 1)


def d(text):
    return Dyadic.parse(text)
