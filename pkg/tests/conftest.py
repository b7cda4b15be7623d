import random

import pytest

from oracles import make_a1, make_square


@pytest.fixture
def a1():
    return make_a1()


@pytest.fixture
def sq_x():
    return make_square("x", ["s1", "s2"])


@pytest.fixture
def sq_y():
    return make_square("y", ["t1", "t2"])


@pytest.fixture
def rng():
    return random.Random(20241015)
