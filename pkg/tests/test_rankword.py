from itertools import product

import pytest

from ratcat.lattice import CoprimePair, DyckPath, enumerate_paths
from ratcat.rankword import (
    Letter,
    RankWord,
    SkipPair,
    build_word,
    cell_letter,
    enumerate_rank_words,
    format_word,
    from_path,
    letter_cell,
    parse_word,
    psi,
    skip_classes,
    skip_pairs,
    to_path,
    validate_highlight,
    word_area,
    word_stats,
)
from ratcat.statistics import skips_cells, stat_triple

from conftest import coprime_pairs

L = Letter
SKIPS_EXAMPLE = {3, 8, 9, 13, 16, 18, 23}  # highlighted ranks of the (5,7) example word


@pytest.fixture
def skips_word(pair_5_7):
    return RankWord.from_ranks(pair_5_7, SKIPS_EXAMPLE)


@pytest.fixture
def firstdyck_word(pair_4_7):
    return RankWord.from_ranks(pair_4_7, {17, 13, 10, 6})


def test_build_word_3_5():
    word = build_word(CoprimePair(3, 5))
    assert word.letters == (L(1, 1), L(2, 2), L(4, 1), L(7, 1))
    assert not any(word.highlighted)


def test_build_word_4_7(pair_4_7):
    word = build_word(pair_4_7)
    assert [x.rank for x in word.letters] == [1, 2, 3, 5, 6, 9, 10, 13, 17]


def test_build_word_m_one():
    assert build_word(CoprimePair(1, 6)).letters == ()


@pytest.mark.parametrize("pair", coprime_pairs(), ids=str)
def test_letters_match_diagram(pair):
    m, n = pair.m, pair.n
    letters = build_word(pair).letters
    assert len(letters) == pair.positive_count
    for x in letters:
        assert 1 <= x.color <= m - 1
        assert any(x.rank == m * n - k * m - x.color * n for k in range(1, n + 1))
        assert cell_letter(pair, letter_cell(pair, x)) == x
    for a in letters:
        for b in letters:
            if a.color == b.color:
                assert (a.rank - b.rank) % m == 0


def test_validate_highlight_examples():
    pair = CoprimePair(3, 5)
    assert validate_highlight(RankWord.from_ranks(pair, {7, 4}))
    assert not validate_highlight(RankWord.from_ranks(pair, {2}))
    assert validate_highlight(RankWord.from_ranks(pair, {2, 7}))
    assert validate_highlight(build_word(pair))


def test_from_ranks_rejects_foreign_rank():
    with pytest.raises(ValueError):
        RankWord.from_ranks(CoprimePair(3, 5), {3})


@pytest.mark.parametrize("pair,count", [((3, 5), 7), ((4, 7), 30), ((2, 3), 2)])
def test_enumerate_rank_words_counts(pair, count):
    assert sum(1 for _ in enumerate_rank_words(CoprimePair(*pair))) == count


@pytest.mark.parametrize("pair", [p for p in coprime_pairs(7) if p.positive_count <= 15], ids=str)
def test_enumeration_matches_direct_search(pair):
    k = pair.positive_count
    direct = {
        flags for flags in product((False, True), repeat=k) if validate_highlight(RankWord(pair, flags))
    }
    assert direct == {w.highlighted for w in enumerate_rank_words(pair)}
    assert len(direct) == pair.catalan_number


def test_seven_3_5_words():
    pair = CoprimePair(3, 5)
    got = {w.highlighted_ranks for w in enumerate_rank_words(pair)}
    expected = {
        frozenset(), frozenset({7}), frozenset({7, 4}), frozenset({7, 4, 1}),
        frozenset({7, 2}), frozenset({7, 4, 2}), frozenset({7, 4, 2, 1}),
    }
    assert got == expected


def test_firstdyck_word_to_path(firstdyck_word, pair_4_7):
    path = to_path(firstdyck_word)
    assert path.shape == (2, 2, 0, 0, 0, 0, 0)
    assert from_path(path) == firstdyck_word
    assert to_path(build_word(pair_4_7)).shape == (0,) * 7


@pytest.mark.parametrize("pair", coprime_pairs(), ids=str)
def test_bijection_and_transport(pair):
    seen = set()
    for path in enumerate_paths(pair):
        word = from_path(path)
        assert validate_highlight(word)
        assert to_path(word) == path
        seen.add(word)
        for x, h in zip(word.letters, word.highlighted):
            assert h == path.is_above(letter_cell(pair, x))
        assert word_stats(word) == stat_triple(path)
    assert len(seen) == pair.catalan_number


def test_word_area_examples(firstdyck_word):
    assert word_area(firstdyck_word) == 5
    pair = CoprimePair(3, 5)
    assert word_area(build_word(pair)) == 4
    assert word_area(RankWord(pair, (True,) * 4)) == 0


def test_skip_pairs_example(skips_word):
    expected = {
        SkipPair(L(3, 1), L(4, 3)),
        SkipPair(L(3, 1), L(6, 2)),
        SkipPair(L(3, 1), L(11, 2)),
        SkipPair(L(8, 1), L(11, 2)),
        SkipPair(L(9, 3), L(11, 2)),
    }
    assert skip_pairs(skips_word) == expected


def test_skip_classes_example(skips_word):
    classes = skip_classes(skips_word)
    assert set(classes) == {
        frozenset({SkipPair(L(3, 1), L(4, 3)), SkipPair(L(3, 1), L(11, 2)), SkipPair(L(8, 1), L(11, 2))}),
        frozenset({SkipPair(L(3, 1), L(6, 2))}),
        frozenset({SkipPair(L(9, 3), L(11, 2))}),
    }
    assert word_stats(skips_word) == (5, 4, 3)


def test_skip_pairs_trivial(pair_5_7):
    assert skip_pairs(build_word(pair_5_7)) == set()
    full = RankWord(pair_5_7, (True,) * pair_5_7.positive_count)
    assert skip_pairs(full) == set()
    assert word_stats(build_word(pair_5_7)) == (12, 0, 0)


def test_firstdyck_skip_class(firstdyck_word):
    (only,) = skip_classes(firstdyck_word)
    assert only == {SkipPair(L(6, 2), L(9, 1))}
    assert word_stats(firstdyck_word) == (5, 3, 1)


def test_psi_examples(skips_word, firstdyck_word):
    assert psi(skips_word, (L(3, 1), L(4, 3))) == L(18, 1)
    assert psi(skips_word, (L(3, 1), L(11, 2))) == L(18, 1)
    assert psi(firstdyck_word, (L(6, 2), L(9, 1))) == L(13, 1)
    with pytest.raises(ValueError):
        psi(skips_word, (L(3, 1), L(1, 2)))


def eq12_literal(p, q, n):
    """The generator exactly as displayed: k=r and b=d (mod n), or l=t and a=c (mod n)."""
    (a, k), (b, l) = p
    (c, r), (d, t) = q
    return (k == r and (b - d) % n == 0) or (l == t and (a - c) % n == 0)


@pytest.mark.parametrize("pair", coprime_pairs(), ids=str)
def test_skip_class_structure(pair):
    n = pair.n
    for path in enumerate_paths(pair):
        word = from_path(path)
        pairs = skip_pairs(word)
        classes = skip_classes(word)
        assert set().union(*classes) == pairs if classes else not pairs
        assert len(classes) == len(skips_cells(path))
        images = []
        for cls in classes:
            assert len({p.ascending for p in cls}) == 1
            (image,) = {psi(word, p) for p in cls}
            images.append(image)
            assert word.highlighted[word.letters.index(image)]
        assert len(set(images)) == len(images)
        assert {letter_cell(pair, x) for x in images} == set(skips_cells(path))
        for p in pairs:
            assert p.left.color != p.right.color
            for q in pairs:
                if eq12_literal(p, q, n):
                    assert p.ascending == q.ascending


def test_literal_generator_overmerges_example(skips_word):
    # read literally, the second case joins (3_1,6_2) with (3_1,11_2): same column 2, a = c
    assert eq12_literal(SkipPair(L(3, 1), L(6, 2)), SkipPair(L(3, 1), L(11, 2)), 7)


def test_word_text_format():
    pair = CoprimePair(3, 8)
    text = "1_1 2_2 4_1 [5_2] 7_1 [10_1] [13_1]"
    word = parse_word(pair, text)
    assert word.highlighted_ranks == {5, 10, 13}
    assert format_word(word) == text
    with pytest.raises(ValueError):
        parse_word(pair, "1_1 2_2 4_1")
    with pytest.raises(ValueError):
        parse_word(pair, "1_1 2_1 4_1 5_2 7_1 10_1 13_1")


@pytest.mark.parametrize("pair", coprime_pairs(6), ids=str)
def test_word_text_roundtrip(pair):
    for word in enumerate_rank_words(pair):
        assert parse_word(pair, format_word(word)) == word


def test_rank_word_rejects_wrong_length():
    with pytest.raises(ValueError):
        RankWord(CoprimePair(3, 5), (True,))


def test_path_from_word_is_valid_dyck_path(skips_word):
    assert isinstance(to_path(skips_word), DyckPath)
    assert to_path(skips_word).shape == (3, 1, 1, 1, 1, 0, 0)
