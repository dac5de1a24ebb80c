from itertools import combinations
from math import gcd

import pytest

from ratcat.lattice import CoprimePair


def coprime_pairs(limit=9):
    return [
        CoprimePair(m, n)
        for m in range(1, limit + 1)
        for n in range(1, limit + 1)
        if gcd(m, n) == 1
    ]


def brute_force_shapes(m, n):
    """Shapes of all N/E step sequences from (0,0) to (m,n) staying weakly above the diagonal.

    Built from raw step sequences, independent of the shape enumerator.
    """
    shapes = set()
    for north in combinations(range(m + n), n):
        north = set(north)
        x = y = 0
        ok = True
        rows = [0] * n  # rows[v-1]: x position of the north step from y=v-1 to v
        for i in range(m + n):
            if i in north:
                rows[y] = x
                y += 1
            else:
                x += 1
            if y * m < x * n:
                ok = False
                break
        if ok:
            # cells above the path in row v are columns 1..x where x is where the path crosses that row
            shapes.add(tuple(rows[v - 1] for v in range(n, 0, -1)))
    return shapes


@pytest.fixture
def pair_4_7():
    return CoprimePair(4, 7)


@pytest.fixture
def pair_5_7():
    return CoprimePair(5, 7)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
