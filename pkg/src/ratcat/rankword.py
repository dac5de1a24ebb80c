"""
(m,n)-words and rank words.

The (m,n)-word lists every positive ``mn - km - ln`` (k, l >= 1) in
increasing order; the letter carries color ``l``, which is the column of
that rank in the diagram.  A rank word highlights a subset of letters that
is closed upward within rows (congruence mod n) and columns (congruence
mod m).  Highlighted letters are exactly the positive-rank cells above the
corresponding Dyck path.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .lattice import Cell, CoprimePair, DyckPath, enumerate_paths, gamma
from .statistics import StatTriple


class Letter(NamedTuple):
    rank: int
    color: int

    def __str__(self):
        return f"{self.rank}_{self.color}"


class SkipPair(NamedTuple):
    left: Letter  # highlighted
    right: Letter  # unhighlighted, larger rank

    @property
    def ascending(self) -> bool:
        """True for the ``k < l`` side, False for ``k > l``."""
        return self.left.color < self.right.color


@lru_cache(maxsize=256)
def word_letters(pair: CoprimePair) -> tuple[Letter, ...]:
    m, n = pair.m, pair.n
    letters = [
        Letter(m * n - k * m - l * n, l)
        for l in range(1, m)
        for k in range(1, n + 1)
        if m * n - k * m - l * n > 0
    ]
    return tuple(sorted(letters))


def letter_cell(pair: CoprimePair, letter: Letter) -> Cell:
    m, n = pair.m, pair.n
    k, rem = divmod(m * n - letter.color * n - letter.rank, m)
    if rem or not 1 <= k <= n or not 1 <= letter.color < m or letter.rank <= 0:
        raise ValueError(f"{letter} is not a letter of the ({pair})-word")
    return Cell(letter.color, n + 1 - k)


def cell_letter(pair: CoprimePair, cell) -> Letter:
    rank = gamma(pair, cell)
    if rank <= 0:
        raise ValueError(f"cell {tuple(cell)} has non-positive rank {rank}")
    return Letter(rank, cell[0])


@dataclass(frozen=True)
class RankWord:
    pair: CoprimePair
    highlighted: tuple[bool, ...]
    letters: tuple[Letter, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        letters = word_letters(self.pair)
        highlighted = tuple(bool(h) for h in self.highlighted)
        if len(highlighted) != len(letters):
            raise ValueError(f"expected {len(letters)} highlight flags, got {len(highlighted)}")
        object.__setattr__(self, "highlighted", highlighted)
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ranks(cls, pair: CoprimePair, ranks: Iterable[int]) -> "RankWord":
        ranks = set(ranks)
        letters = word_letters(pair)
        unknown = ranks - {x.rank for x in letters}
        if unknown:
            raise ValueError(f"ranks {sorted(unknown)} are not in the ({pair})-word")
        return cls(pair, tuple(x.rank in ranks for x in letters))

    @property
    def highlighted_letters(self) -> list[Letter]:
        return [x for x, h in zip(self.letters, self.highlighted) if h]

    @property
    def highlighted_ranks(self) -> frozenset:
        return frozenset(x.rank for x in self.highlighted_letters)

    def __str__(self):
        return format_word(self)


def build_word(pair: CoprimePair) -> RankWord:
    """The (m,n)-word with nothing highlighted."""
    return RankWord(pair, (False,) * len(word_letters(pair)))


def validate_highlight(word: RankWord) -> bool:
    m, n = word.pair.m, word.pair.n
    lowest = {}
    for x, h in zip(word.letters, word.highlighted):
        for key in ((0, x.rank % n), (1, x.rank % m)):
            if h:
                lowest.setdefault(key, x.rank)
            elif key in lowest:
                return False
    return True


def to_path(word: RankWord) -> DyckPath:
    pair = word.pair
    rows = [0] * pair.n
    for x in word.highlighted_letters:
        _, v = letter_cell(pair, x)
        rows[pair.n - v] += 1
    return DyckPath(pair, tuple(rows))


def from_path(path: DyckPath) -> RankWord:
    pair = path.pair
    return RankWord(
        pair, tuple(path.is_above(letter_cell(pair, x)) for x in word_letters(pair))
    )


def enumerate_rank_words(pair: CoprimePair) -> Iterator[RankWord]:
    for path in enumerate_paths(pair):
        yield from_path(path)


def word_area(word: RankWord) -> int:
    return word.highlighted.count(False)


def skip_pairs(word: RankWord) -> set[SkipPair]:
    pairs = set()
    seen = []
    for x, h in zip(word.letters, word.highlighted):
        if h:
            seen.append(x)
            continue
        for a in seen:
            assert a.color != x.color, f"same-color skip pair ({a},{x})"
            pairs.add(SkipPair(a, x))
    return pairs


def skip_pairs_linked(p: SkipPair, q: SkipPair, n: int) -> bool:
    """Generator of the skip equivalence.

    On the ascending side the highlighted letters share a column and the
    unhighlighted ones a row; on the descending side the highlighted letters
    share a row and the unhighlighted ones a column.  Pairs from different
    sides are never linked.
    """
    if p.ascending != q.ascending:
        return False
    if p.ascending:
        return p.left.color == q.left.color and (p.right.rank - q.right.rank) % n == 0
    return p.right.color == q.right.color and (p.left.rank - q.left.rank) % n == 0


class _DisjointSet:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)

    def groups(self):
        out = defaultdict(set)
        for x in self.parent:
            out[self.find(x)].add(x)
        return [frozenset(out[r]) for r in sorted(out)]


def skip_classes(word: RankWord) -> list[frozenset]:
    """Equivalence classes of ``skip_pairs``, ordered by their smallest pair."""
    pairs = sorted(skip_pairs(word))
    classes = _DisjointSet(pairs)
    n = word.pair.n
    for i, p in enumerate(pairs):
        for q in pairs[i + 1:]:
            if skip_pairs_linked(p, q, n):
                classes.union(p, q)
    return classes.groups()


def psi(word: RankWord, skip: SkipPair) -> Letter:
    """Letter at the corner cell shared by a skip pair's row and column.

    Ascending pairs map to the cell in the highlighted letter's column and
    the unhighlighted letter's row; descending pairs to the highlighted
    letter's row and the unhighlighted letter's column.
    """
    skip = SkipPair(Letter(*skip[0]), Letter(*skip[1]))
    if skip not in skip_pairs(word):
        raise ValueError(f"({skip.left},{skip.right}) is not a skip pair of {word}")
    pair = word.pair
    a_col, a_row = letter_cell(pair, skip.left)
    b_col, b_row = letter_cell(pair, skip.right)
    if skip.ascending:
        return cell_letter(pair, (a_col, b_row))
    return cell_letter(pair, (b_col, a_row))


def word_stats(word: RankWord) -> StatTriple:
    area = word_area(word)
    skips = len(skip_classes(word))
    return StatTriple(area, word.pair.positive_count - area - skips, skips)


def format_word(word: RankWord) -> str:
    return " ".join(
        f"[{x}]" if h else str(x) for x, h in zip(word.letters, word.highlighted)
    )


def parse_word(pair: CoprimePair, text: str) -> RankWord:
    """Inverse of ``format_word``; letters must be exactly the (m,n)-word."""
    letters, flags = [], []
    for token in text.split():
        h = token.startswith("[") and token.endswith("]")
        rank, sep, color = token.strip("[]").partition("_")
        try:
            letters.append(Letter(int(rank), int(color)))
        except ValueError as exc:
            raise ValueError(f"malformed letter {token!r}") from exc
        if not sep:
            raise ValueError(f"malformed letter {token!r}")
        flags.append(h)
    if tuple(letters) != word_letters(pair):
        raise ValueError(f"letters do not form the ({pair})-word")
    return RankWord(pair, tuple(flags))
