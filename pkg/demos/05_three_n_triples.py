"""
Three columns
=============

For m = 3 a path is pinned down by (area, dinv, skips).  Swapping area and
dinv in the triple gives an involution on paths, and the generating function
splits into two-variable Schur polynomials.
"""

from ratcat import CoprimePair
from ratcat.polynomial import genfun_W
from ratcat.rankword import format_word, to_path
from ratcat.statistics import stat_triple
from ratcat.three_n import DyckTriple, construct_word, schur_expansion, swap_bijection

for triple in [DyckTriple(3, 2, 2), DyckTriple(5, 1, 1)]:
    word = construct_word(triple)
    print(triple, "->", format_word(word))

path = to_path(construct_word(DyckTriple(3, 2, 2)))
image = swap_bijection(path)
print("swap:", stat_triple(path), "->", stat_triple(image))

for n in [4, 5, 7, 8, 10, 11]:
    print(n, genfun_W(CoprimePair(3, n)) == schur_expansion(n))
