"""
Area, dinv and skips of a rational Dyck path.

The positive-rank cells of the diagram split into three sets: those below
the path (area), and the above-path cells that do or do not satisfy the
arm/leg inequality (dinv and skips).  Two engines decide the dinv
membership: ``dinv_naive`` from arm and leg counts, and ``dinv_fast`` from
four rank comparisons.  They must always agree.
"""

from __future__ import annotations

from typing import NamedTuple

from .lattice import Cell, DyckPath, arm, check_cell, gamma, leg, positive_cells


class StatTriple(NamedTuple):
    area: int
    dinv: int
    skips: int


class CellPartition(NamedTuple):
    area_cells: frozenset
    dinv_cells: frozenset
    skips_cells: frozenset


def area_cells(path: DyckPath) -> frozenset:
    return frozenset(c for c in positive_cells(path.pair) if not path.is_above(c))


def in_dinv_naive(path: DyckPath, cell) -> bool:
    # arm/(leg+1) < m/n < (arm+1)/leg, cross-multiplied; leg == 0 gives the infinite bound
    m, n = path.pair.m, path.pair.n
    a, l = arm(path, cell), leg(path, cell)
    assert a * n != m * (l + 1) and l * m != n * (a + 1)
    return a * n < m * (l + 1) and l * m < n * (a + 1)


def dinv_naive(path: DyckPath) -> frozenset:
    return frozenset(c for c in path.above_cells() if in_dinv_naive(path, c))


def east_end(path: DyckPath, cell) -> Cell:
    """Easternmost above-path cell in the row of ``cell``."""
    _, v = cell
    return Cell(path.row_length(v), v)


def east_beyond(path: DyckPath, cell) -> Cell:
    """Westernmost below-path cell in the row; may sit in column m."""
    _, v = cell
    return check_cell(path.pair, (path.row_length(v) + 1, v))


def south_end(path: DyckPath, cell) -> Cell:
    """Southernmost above-path cell in the column of ``cell``."""
    u, v = cell
    while v > 1 and path.row_length(v - 1) >= u:
        v -= 1
    return Cell(u, v)


def south_beyond(path: DyckPath, cell) -> Cell:
    """Northernmost below-path cell in the column; its rank may be negative."""
    u, v = south_end(path, cell)
    return check_cell(path.pair, (u, v - 1))


def in_dinv_fast(path: DyckPath, cell) -> bool:
    pair = path.pair
    return (
        gamma(pair, east_end(path, cell)) > gamma(pair, south_beyond(path, cell))
        and gamma(pair, south_end(path, cell)) > gamma(pair, east_beyond(path, cell))
    )


def dinv_fast(path: DyckPath) -> frozenset:
    return frozenset(c for c in path.above_cells() if in_dinv_fast(path, c))


def skips_cells(path: DyckPath) -> frozenset:
    return frozenset(path.above_cells()) - dinv_fast(path)


def cell_partition(path: DyckPath) -> CellPartition:
    dinv = dinv_fast(path)
    return CellPartition(area_cells(path), dinv, frozenset(path.above_cells()) - dinv)


def stat_triple(path: DyckPath) -> StatTriple:
    area, dinv, skips = cell_partition(path)
    return StatTriple(len(area), len(dinv), len(skips))
