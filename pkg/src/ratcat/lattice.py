"""
The (m,n)-diagram: cell ranks, rational Dyck paths and their enumeration.

Cells are addressed by the lattice point of their northeast corner, so
cell ``(u, v)`` sits in column ``u`` (1..m) and row ``v`` (1..n).  A Dyck
path is stored as the English Ferrers shape of the cells above it, one row
length per row, top row first.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, gcd
from typing import Iterator, NamedTuple

import numpy as np

INT64_MAX = 2**63 - 1


class OutOfRangeError(ValueError):
    """A cell lies outside the m x n diagram."""


@dataclass(frozen=True)
class CoprimePair:
    """Columns ``m`` and rows ``n`` of the diagram; the only place coprimality is checked."""

    m: int
    n: int

    def __post_init__(self):
        for name in ("m", "n"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise TypeError(f"{name} must be an integer, got {value!r}")
            if value < 1:
                raise ValueError(f"{name} must be positive, got {value}")
        if gcd(self.m, self.n) != 1:
            raise ValueError(f"m and n must be coprime, got ({self.m},{self.n})")
        if self.m * self.n > INT64_MAX:
            raise OverflowError(f"ranks of ({self.m},{self.n}) do not fit in 64 bits")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", int(self.n))

    @property
    def positive_count(self) -> int:
        """Number of positive ranks, (m-1)(n-1)/2."""
        return (self.m - 1) * (self.n - 1) // 2

    @property
    def catalan_number(self) -> int:
        """Number of (m,n)-Dyck paths."""
        return comb(self.m + self.n, self.m) // (self.m + self.n)

    def __str__(self):
        return f"{self.m},{self.n}"


class Cell(NamedTuple):
    u: int  # column, 1..m
    v: int  # row, 1..n


def check_cell(pair: CoprimePair, cell) -> Cell:
    u, v = cell
    if not (1 <= u <= pair.m and 1 <= v <= pair.n):
        raise OutOfRangeError(f"cell ({u},{v}) outside the ({pair}) diagram")
    return Cell(u, v)


def gamma(pair: CoprimePair, cell) -> int:
    """Rank of ``cell``: mn - un - (n+1-v)m."""
    u, v = check_cell(pair, cell)
    m, n = pair.m, pair.n
    return m * n - u * n - (n + 1 - v) * m


def is_above_diagonal(pair: CoprimePair, cell) -> bool:
    """True when the cell lies strictly above the diagonal from (0,0) to (m,n)."""
    u, v = check_cell(pair, cell)
    return (v - 1) * pair.m - u * pair.n > 0


def rank_diagram(pair: CoprimePair) -> np.ndarray:
    """The ranks as an ``(n, m)`` int64 array laid out as drawn: row ``n`` first.

    ``rank_diagram(pair)[n - v, u - 1] == gamma(pair, (u, v))``.
    """
    m, n = pair.m, pair.n
    u = np.arange(1, m + 1, dtype=np.int64)
    v = np.arange(n, 0, -1, dtype=np.int64)
    return m * n - u[None, :] * n - (n + 1 - v[:, None]) * m


def max_row_length(pair: CoprimePair, v: int) -> int:
    """Number of positive-rank cells in row ``v``; they are columns 1..result."""
    return max(0, ((v - 1) * pair.m - 1) // pair.n)


def positive_cells(pair: CoprimePair) -> list[Cell]:
    return [
        Cell(u, v)
        for v in range(pair.n, 0, -1)
        for u in range(1, max_row_length(pair, v) + 1)
    ]


@dataclass(frozen=True)
class DyckPath:
    pair: CoprimePair
    shape: tuple[int, ...]  # lambda_n, ..., lambda_1

    def __post_init__(self):
        shape = tuple(int(x) for x in self.shape)
        object.__setattr__(self, "shape", shape)
        n = self.pair.n
        if len(shape) != n:
            raise ValueError(f"shape needs {n} row lengths, got {len(shape)}")
        for i, length in enumerate(shape):
            v = n - i
            if length < 0:
                raise ValueError(f"negative row length in row {v}")
            if i > 0 and length > shape[i - 1]:
                raise ValueError(f"shape is not weakly decreasing at row {v}")
            if length > max_row_length(self.pair, v):
                raise ValueError(
                    f"row {v} has {length} cells above the path but only "
                    f"{max_row_length(self.pair, v)} positive ranks"
                )

    def row_length(self, v: int) -> int:
        return self.shape[self.pair.n - v]

    def is_above(self, cell) -> bool:
        u, v = check_cell(self.pair, cell)
        return u <= self.row_length(v)

    def above_cells(self) -> list[Cell]:
        n = self.pair.n
        return [Cell(u, n - i) for i, length in enumerate(self.shape) for u in range(1, length + 1)]

    @property
    def size(self) -> int:
        return sum(self.shape)

    def __str__(self):
        return format_path(self)


def cell_classification(path: DyckPath, cell) -> str:
    return "above_path" if path.is_above(cell) else "below_path"


def _require_above(path: DyckPath, cell) -> Cell:
    cell = check_cell(path.pair, cell)
    if not path.is_above(cell):
        raise ValueError(f"cell {tuple(cell)} is below the path")
    return cell


def arm(path: DyckPath, cell) -> int:
    """Cells above the path strictly east of ``cell``."""
    u, v = _require_above(path, cell)
    return path.row_length(v) - u


def leg(path: DyckPath, cell) -> int:
    """Cells above the path strictly south of ``cell``."""
    u, v = _require_above(path, cell)
    return sum(1 for w in range(1, v) if path.row_length(w) >= u)


def enumerate_paths(pair: CoprimePair, top_row: int | None = None) -> Iterator[DyckPath]:
    """Every (m,n)-Dyck path once, in lexicographically increasing shape order.

    ``top_row`` restricts to paths whose top row has that length, which is
    how callers split the stream into independent chunks.
    """
    n = pair.n
    caps = [max_row_length(pair, n - i) for i in range(n)]
    shape = [0] * n

    def fill(i, bound):
        if i == n:
            yield DyckPath(pair, tuple(shape))
            return
        for length in range(min(bound, caps[i]) + 1):
            shape[i] = length
            yield from fill(i + 1, length)

    if top_row is None:
        yield from fill(0, caps[0])
    elif 0 <= top_row <= caps[0]:
        shape[0] = top_row
        yield from fill(1, top_row)


def format_path(path: DyckPath) -> str:
    return f"{path.pair.m},{path.pair.n}:" + ",".join(str(x) for x in path.shape)


def parse_path(text: str) -> DyckPath:
    """Parse ``m,n:lambda_n,...,lambda_1``."""
    try:
        head, _, body = text.strip().partition(":")
        m, n = (int(x) for x in head.split(","))
        shape = tuple(int(x) for x in body.split(",")) if body.strip() else ()
    except ValueError as exc:
        raise ValueError(f"malformed path {text!r}") from exc
    return DyckPath(CoprimePair(m, n), shape)
