"""
Rank words and skip classes
===========================

A path is the same thing as a highlighting of the (m,n)-word closed under
adding m or n.  Skips show up as classes of crossing letter pairs.
"""

from ratcat import CoprimePair, RankWord
from ratcat.rankword import format_word, skip_classes, skip_pairs, to_path, word_stats
from ratcat.statistics import stat_triple

pair = CoprimePair(5, 7)
word = RankWord.from_ranks(pair, {3, 8, 9, 13, 16, 18, 23})
print(format_word(word))

print("pairs:")
for skip in sorted(skip_pairs(word)):
    print("  ", skip.left, skip.right)

print("classes:")
for cls in skip_classes(word):
    print("  ", ", ".join(f"({p.left},{p.right})" for p in sorted(cls)))

# word statistics agree with the path read off the highlighting
print(word_stats(word), stat_triple(to_path(word)))
