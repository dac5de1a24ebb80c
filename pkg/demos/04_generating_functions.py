"""
Generating functions
====================

W(b,q,t) tracks skips, dinv and area over all rank words.  Setting b = 1
recovers the rational q,t-Catalan polynomial.
"""

from ratcat import CoprimePair
from ratcat.polynomial import catalan_C, genfun_W

for m, n in [(3, 5), (4, 7), (5, 7)]:
    pair = CoprimePair(m, n)
    w = genfun_W(pair)
    c = catalan_C(pair)
    print(f"W_{m},{n} =", w)
    print("  W(1,q,t) == C:", w.substitute("b") == c)
    print("  C symmetric in q,t:", c == c.swap_qt())
    print("  total:", c.coefficient_sum())
