"""Exit criteria.  Each test records one PASS/FAIL line, shown in the terminal summary."""

import time
from contextlib import contextmanager
from math import comb


from ratcat.harness import lattice_path_count
from ratcat.lattice import CoprimePair, DyckPath, enumerate_paths, gamma
from ratcat.polynomial import BqtPolynomial, catalan_C, genfun_W, schur_two_var
from ratcat.rankword import (
    Letter,
    RankWord,
    SkipPair,
    enumerate_rank_words,
    skip_classes,
    skip_pairs,
    to_path,
    word_stats,
)
from ratcat.statistics import (
    dinv_fast,
    dinv_naive,
    east_beyond,
    east_end,
    skips_cells,
    south_beyond,
    south_end,
    stat_triple,
)
from ratcat.three_n import (
    ARM0_LONG_LEG,
    ARM1_SHORT_LEG,
    DyckTriple,
    classify_first_column,
    construct_word,
    enumerate_triples,
    schur_expansion,
    skips_adjacent,
    swap_bijection,
    triple_of_path,
)

from conftest import ACCEPTANCE_LINES, coprime_pairs

PAIRS = coprime_pairs(9)
THREE_16 = [n for n in range(1, 17) if n % 3]
THREE_20 = [n for n in range(1, 21) if n % 3]


@contextmanager
def criterion(number, title, limit=None):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        bound = f" (limit {limit}s)" if limit else ""
        ACCEPTANCE_LINES.append(f"[{number:>2}] {status} {title}: {elapsed:.2f}s{bound}")


def test_01_path_counts():
    with criterion(1, "path counts = binom(m+n,m)/(m+n), m,n <= 9", limit=10):
        for pair in PAIRS:
            count = sum(1 for _ in enumerate_paths(pair))
            expected = comb(pair.m + pair.n, pair.m) // (pair.m + pair.n)
            assert count == expected == lattice_path_count(pair.m, pair.n), str(pair)
        for mn, count in [((3, 5), 7), ((4, 7), 30), ((5, 7), 66)]:
            assert sum(1 for _ in enumerate_paths(CoprimePair(*mn))) == count


def test_02_fast_dinv():
    with criterion(2, "fast dinv = naive dinv on every path, m,n <= 9; (5,7) worked example", limit=30):
        for pair in PAIRS:
            for path in enumerate_paths(pair):
                assert dinv_fast(path) == dinv_naive(path), str(path)
        pair = CoprimePair(5, 7)
        path = DyckPath(pair, (2, 1, 1, 1, 1, 0, 0))
        cell = (1, 7)
        values = [
            gamma(pair, east_end(path, cell)),
            gamma(pair, south_beyond(path, cell)),
            gamma(pair, south_end(path, cell)),
            gamma(pair, east_beyond(path, cell)),
        ]
        assert values == [16, -2, 3, 9]
        assert cell not in dinv_fast(path) and cell not in dinv_naive(path)


def test_03_statistic_transport():
    with criterion(3, "word stats = path stats and |classes| = skips, m,n <= 9; (5,7) S example", limit=60):
        for pair in PAIRS:
            for word in enumerate_rank_words(pair):
                path = to_path(word)
                assert word_stats(word) == stat_triple(path), str(word)
                assert len(skip_classes(word)) == len(skips_cells(path)), str(word)
        word = RankWord.from_ranks(CoprimePair(5, 7), {3, 8, 9, 13, 16, 18, 23})
        L = Letter
        s = {
            SkipPair(L(3, 1), L(4, 3)), SkipPair(L(3, 1), L(6, 2)), SkipPair(L(3, 1), L(11, 2)),
            SkipPair(L(8, 1), L(11, 2)), SkipPair(L(9, 3), L(11, 2)),
        }
        assert skip_pairs(word) == s
        assert set(skip_classes(word)) == {
            frozenset({SkipPair(L(3, 1), L(4, 3)), SkipPair(L(3, 1), L(11, 2)), SkipPair(L(8, 1), L(11, 2))}),
            frozenset({SkipPair(L(3, 1), L(6, 2))}),
            frozenset({SkipPair(L(9, 3), L(11, 2))}),
        }


def test_04_conservation():
    with criterion(4, "area + dinv + skips = (m-1)(n-1)/2 on every path, m,n <= 9"):
        for pair in PAIRS:
            for path in enumerate_paths(pair):
                assert sum(stat_triple(path)) == (pair.m - 1) * (pair.n - 1) // 2, str(path)


def test_05_generating_function_identity():
    with criterion(5, "W(1,q,t) = C(q,t), m,n <= 9"):
        for pair in PAIRS:
            assert genfun_W(pair).substitute("b") == catalan_C(pair), str(pair)


def test_06_schur_formula():
    with criterion(6, "W_{3,n} = sum b^i s_(n-1-2i,i), n <= 20", limit=10):
        for n in THREE_20:
            expected = BqtPolynomial()
            for i in range(n // 3 + 1):
                expected += BqtPolynomial.monomial(b=i) * schur_two_var(n - 1 - 2 * i, i)
            w = genfun_W(CoprimePair(3, n))
            assert w == expected == schur_expansion(n), n
        b = BqtPolynomial.monomial(b=1)
        assert genfun_W(CoprimePair(3, 5)) == schur_two_var(4, 0) + b * schur_two_var(2, 1)


def test_07_symmetry():
    with criterion(7, "C_{3,n}(q,t) = C_{3,n}(t,q), n <= 20"):
        for n in THREE_20:
            c = catalan_C(CoprimePair(3, n))
            assert c == c.swap_qt(), n


def test_08_construction_algorithm():
    with criterion(8, "construction examples, round trip and injectivity, n <= 16"):
        L = Letter
        assert set(construct_word(DyckTriple(3, 2, 2)).highlighted_letters) == {
            L(2, 2), L(5, 2), L(10, 1), L(13, 1)
        }
        assert set(construct_word(DyckTriple(5, 1, 1)).highlighted_letters) == {L(5, 2), L(13, 1)}
        for n in THREE_16:
            seen = set()
            for triple in enumerate_triples(n):
                word = construct_word(triple)
                assert triple_of_path(to_path(word)) == triple
                assert word not in seen
                seen.add(word)
            assert len(seen) == CoprimePair(3, n).catalan_number


def test_09_swap_bijection():
    with criterion(9, "swap exchanges area/dinv, keeps skips, is an involution, n <= 16"):
        for n in THREE_16:
            for path in enumerate_paths(CoprimePair(3, n)):
                area, dinv, skips = stat_triple(path)
                image = swap_bijection(path)
                assert stat_triple(image) == (dinv, area, skips)
                assert swap_bijection(image) == path


def test_10_three_column_skips_rule():
    with criterion(10, "adjacent-letter skips = |classes|; first-column skips classified, n <= 16"):
        for n in THREE_16:
            for word in enumerate_rank_words(CoprimePair(3, n)):
                assert skips_adjacent(word) == len(skip_classes(word))
                path = to_path(word)
                for cell in skips_cells(path):
                    if cell.u == 1:
                        assert classify_first_column(path, cell) in (ARM1_SHORT_LEG, ARM0_LONG_LEG)
