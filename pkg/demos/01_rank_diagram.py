"""
Rank diagrams and Dyck paths
============================

Every cell of the m x n grid gets a rank; the positive ones sit above the
diagonal, and a Dyck path is a choice of which of them lie above the path.
"""

from ratcat import CoprimePair, enumerate_paths, format_path, rank_diagram

pair = CoprimePair(5, 7)

# rows are printed top row first, column 1 on the left
ranks = rank_diagram(pair)
print(ranks)
print("positive cells:", int((ranks > 0).sum()), "=", pair.positive_count)

# the enumerator walks shapes in lexicographic order of the rows
paths = list(enumerate_paths(pair))
print(len(paths), "paths; rational Catalan number", pair.catalan_number)
for path in paths[:5]:
    print(" ", format_path(path))
