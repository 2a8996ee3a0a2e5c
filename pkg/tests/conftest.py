import random

import pytest

from crossfam.geometry import PointSet
from crossfam.search import random_general_position


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_pointset(rng: random.Random, n: int, bound: int = 50) -> PointSet:
    return random_general_position(n, rng, bound)


# 9-point configuration with no 3-crossing family, recovered by the bundled
# annealer and re-verified by both exact solvers at package time.
NINE_POINT_CF2 = (
    (-28, -5), (-61, -4), (12, 50), (24, -16), (-17, 9),
    (-29, 2), (72, -44), (-77, -9), (5, 17),
)
