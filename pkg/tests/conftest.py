import random

import pytest

from projflip.coherence import seed_configuration
from projflip.motion import motion_script
from projflip.suite import double_patch, hexagon_patch


@pytest.fixture
def rng():
    return random.Random(20260823)


@pytest.fixture
def patch_config(rng):
    return seed_configuration(hexagon_patch(), rng)


@pytest.fixture
def double_config(rng):
    return seed_configuration(double_patch(), rng)


def loop_script(tmax):
    """Four lines driven around the quadruple-point stratum; the half
    loop (tmax=2) crosses each of the four walls once."""
    c1 = [(0, 1), (1, 1), (2, -1), (3, -1), (4, 1)]
    c2 = [(0, -1), (1, 1), (2, 1), (3, -1), (4, -1)]
    raw = [
        [(t, (2, -1, c)) for t, c in c1 if t <= tmax],
        [(t, (1, -1, c)) for t, c in c2 if t <= tmax],
        [(0, (0, -1, 0)), (tmax, (0, -1, 0))],
        [(0, (-1, -1, 0)), (tmax, (-1, -1, 0))],
    ]
    return motion_script(raw)


@pytest.fixture
def half_loop():
    return loop_script(2)


@pytest.fixture
def full_loop():
    return loop_script(4)
