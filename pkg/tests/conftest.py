import random

import pytest
from hypothesis import strategies as st

from pinnsort import Permutation

# running example: start, the reference state after each phase, the reference reversals
WORKED_START = (16, 10, 11, 6, 17, 18, 7, 8, 1, 3, 2, 5, 4, 13, 12, 9, 15, 14, 19)
WORKED_AFTER_STEP1 = (1, 3, 2, 5, 4, 8, 7, 11, 6, 13, 12, 9, 15, 14, 18, 17, 10, 16, 19)
WORKED_AFTER_STEP2 = (1, 3, 2, 5, 4, 8, 6, 11, 7, 13, 9, 15, 10, 17, 18, 14, 12, 16, 19)
WORKED_END = (1, 3, 2, 5, 4, 8, 6, 11, 7, 13, 9, 15, 10, 18, 12, 14, 16, 17, 19)
WORKED_S = (3, 5, 8, 11, 13, 15, 18)
WORKED_REVERSALS = [
    (16, 14), (14, 7), (7, 4), (4, 1), (13, 11), (17, 13),
    (7, 6), (14, 10), (9, 14), (12, 9),
    (14, 16), (12, 14), (17, 18), (18, 18), (17, 12),
]

EXAMPLE1 = (8, 6, 7, 4, 3, 2, 1, 5, 10, 9)
EXAMPLE3 = (2, 3, 1, 5, 4, 7, 6)


def perm(values, backend="naive"):
    return Permutation.from_interior(list(values), backend)


def random_perm(n, rng, backend="naive"):
    xs = list(range(1, n + 1))
    rng.shuffle(xs)
    return Permutation.from_interior(xs, backend)


@pytest.fixture
def rng():
    return random.Random(20240611)


@st.composite
def permutations(draw, min_size=1, max_size=24):
    n = draw(st.integers(min_size, max_size))
    return draw(st.permutations(range(1, n + 1)))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
