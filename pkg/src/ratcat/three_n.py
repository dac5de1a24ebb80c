"""
Three-column paths: Dyck triples, the rank word construction algorithm,
the Schur expansion of W_{3,n} and the bijection exchanging area and dinv.

For m = 3 only colors 1 and 2 occur, and a (3,n)-path is determined by its
(area, dinv, skips) triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .lattice import Cell, CoprimePair, DyckPath, arm, leg
from .polynomial import BqtPolynomial, schur_two_var
from .rankword import RankWord, build_word, to_path, validate_highlight
from .statistics import skips_cells, stat_triple

ARM1_SHORT_LEG = "arm1_short_leg"
ARM0_LONG_LEG = "arm0_long_leg"


@dataclass(frozen=True)
class DyckTriple:
    a: int  # area
    d: int  # dinv
    s: int  # skips

    def __post_init__(self):
        if min(self.a, self.d, self.s) < 0:
            raise ValueError(f"triple entries must be non-negative: {self}")
        if self.s > min(self.a, self.d):
            raise ValueError(f"skips {self.s} exceeds min(area, dinv) in {self}")
        if self.n % 3 == 0:
            raise ValueError(f"a+d+s+1 = {self.n} is divisible by 3")

    @property
    def n(self) -> int:
        return self.a + self.d + self.s + 1

    def __str__(self):
        return f"{self.a},{self.d},{self.s}"


def parse_triple(text: str) -> DyckTriple:
    try:
        a, d, s = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed triple {text!r}") from exc
    return DyckTriple(a, d, s)


def enumerate_triples(n: int) -> Iterator[DyckTriple]:
    """All Dyck triples with a + d + s + 1 = n, ordered by (s, d)."""
    if n < 1 or n % 3 == 0:
        return
    for s in range((n - 1) // 3 + 1):
        for d in range(s, n - 1 - 2 * s + 1):
            yield DyckTriple(n - 1 - s - d, d, s)


def _require_three(pair: CoprimePair):
    if pair.m != 3:
        raise ValueError(f"only defined for m = 3, got ({pair})")


def skips_adjacent(word: RankWord) -> int:
    """Unhighlighted letters whose left neighbour is highlighted."""
    _require_three(word.pair)
    h = word.highlighted
    return sum(1 for i in range(1, len(h)) if h[i - 1] and not h[i])


def classify_first_column(path: DyckPath, cell) -> str:
    _require_three(path.pair)
    cell = Cell(*cell)
    if cell.u != 1 or cell not in skips_cells(path):
        raise ValueError(f"cell {tuple(cell)} is not a first-column skip cell")
    n = path.pair.n
    cell_arm, cell_leg = arm(path, cell), leg(path, cell)
    short = cell_arm == 1 and 3 * (cell_leg + 1) < n
    long_ = cell_arm == 0 and n < 3 * cell_leg
    assert short != long_, f"cell {tuple(cell)}: arm {cell_arm}, leg {cell_leg}"
    return ARM1_SHORT_LEG if short else ARM0_LONG_LEG


def construct_word(triple: DyckTriple) -> RankWord:
    """Build the (3,n)-rank word of a Dyck triple, n = a + d + s + 1.

    Highlight the largest ``d`` letters; then ``s`` times take the smallest
    unhighlighted letter r_c whose right neighbour is highlighted, and
    highlight the largest letter below r whose color is not c.
    """
    n = triple.n
    pair = CoprimePair(3, n)
    letters = build_word(pair).letters
    size = len(letters)
    h = [i >= size - triple.d for i in range(size)]

    ceil_third = -(-n // 3)
    if triple.s and triple.d < ceil_third:
        assert triple.s - 1 + ceil_third <= triple.a + triple.d

    for _ in range(triple.s):
        i = next(i for i in range(size - 1) if not h[i] and h[i + 1])
        color = letters[i].color
        j = next(j for j in range(i - 1, -1, -1) if letters[j].color != color)
        assert not h[j]
        h[j] = True

    word = RankWord(pair, tuple(h))
    assert validate_highlight(word), f"construction of {triple} broke the highlight rule"
    return word


def triple_of_path(path: DyckPath) -> DyckTriple:
    _require_three(path.pair)
    return DyckTriple(*stat_triple(path))


def schur_expansion(n: int) -> BqtPolynomial:
    """Sum over i <= n/3 of b^i s_(n-1-2i, i)(q, t)."""
    if n < 1 or n % 3 == 0:
        raise ValueError(f"n must be positive and not divisible by 3, got {n}")
    total = BqtPolynomial()
    for i in range(n // 3 + 1):
        total += BqtPolynomial.monomial(b=i) * schur_two_var(n - 1 - 2 * i, i)
    return total


def swap_bijection(path: DyckPath) -> DyckPath:
    """The (3,n)-path whose area and dinv are this path's dinv and area."""
    t = triple_of_path(path)
    return to_path(construct_word(DyckTriple(t.d, t.a, t.s)))

