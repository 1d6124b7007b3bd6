import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from polysum import NotFullDimensional, cube, from_vertices  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "data"

OCTAGON = [(2, 1), (1, 2), (0, 2), (-1, 1), (-1, 0), (0, -1), (1, -1), (2, 0)]
# facets of the octagon, enumerated by tests/oracles.facets_by_enumeration
OCTAGON_FACETS = [
    ((-1, -1), 1), ((-1, 0), 1), ((-1, 1), 2), ((0, -1), 1),
    ((0, 1), 2), ((1, -1), 2), ((1, 0), 2), ((1, 1), 3),
]


def random_polytope(rng, n, k, box=10):
    """Hull of ``k`` random integer points in ``[-box, box]^n`` (full-dimensional)."""
    while True:
        pts = [tuple(rng.randint(-box, box) for _ in range(n)) for _ in range(k)]
        try:
            return from_vertices(n, pts)
        except NotFullDimensional:
            continue


@pytest.fixture
def square():
    return cube(2)


@pytest.fixture
def diamond():
    return from_vertices(2, [(1, 0), (0, 1), (-1, 0), (0, -1)])


@pytest.fixture
def cube3():
    return cube(3)


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def random_pairs():
    """A small reproducible set of random summand pairs in R^2..R^4."""
    rng = random.Random(20240611)
    out = []
    for n, k in [(2, 8), (2, 15), (3, 7), (3, 12), (4, 7)]:
        out.append((random_polytope(rng, n, k), random_polytope(rng, n, k)))
    return out
