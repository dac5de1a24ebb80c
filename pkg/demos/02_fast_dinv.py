"""
Two ways to compute dinv
========================

The arm/leg test and the rank comparison pick out the same cells.
"""

from ratcat import CoprimePair, DyckPath, enumerate_paths
from ratcat.lattice import gamma
from ratcat.statistics import (
    cell_partition,
    dinv_fast,
    dinv_naive,
    east_beyond,
    east_end,
    south_beyond,
    south_end,
)

pair = CoprimePair(5, 7)
path = DyckPath(pair, (2, 1, 1, 1, 1, 0, 0))
cell = (1, 7)

# the four ranks the fast test compares for the top-left cell
for name, probe in [("east end", east_end), ("south beyond", south_beyond),
                    ("south end", south_end), ("east beyond", east_beyond)]:
    print(f"{name:>13}: {gamma(pair, probe(path, cell))}")
print("(1,7) in dinv:", cell in dinv_fast(path))

parts = cell_partition(path)
print("area cells :", sorted(parts.area_cells))
print("dinv cells :", sorted(parts.dinv_cells))
print("skips cells:", sorted(parts.skips_cells))

# agreement on every path of the pair
mismatches = sum(dinv_fast(p) != dinv_naive(p) for p in enumerate_paths(pair))
print("mismatches over all paths:", mismatches)
