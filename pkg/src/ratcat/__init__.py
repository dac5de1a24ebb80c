"""Rational Dyck paths, rank words, and the area/dinv/skips statistics."""

from .lattice import (
    Cell,
    CoprimePair,
    DyckPath,
    arm,
    cell_classification,
    enumerate_paths,
    format_path,
    gamma,
    is_above_diagonal,
    leg,
    parse_path,
    rank_diagram,
)
from .polynomial import BqtPolynomial, WorkBoundExceeded, catalan_C, genfun_W, schur_two_var
from .rankword import (
    Letter,
    RankWord,
    SkipPair,
    build_word,
    enumerate_rank_words,
    format_word,
    from_path,
    parse_word,
    psi,
    skip_classes,
    skip_pairs,
    to_path,
    validate_highlight,
    word_area,
    word_stats,
)
from .statistics import (
    CellPartition,
    StatTriple,
    area_cells,
    cell_partition,
    dinv_fast,
    dinv_naive,
    skips_cells,
    stat_triple,
)
from .three_n import (
    DyckTriple,
    classify_first_column,
    construct_word,
    schur_expansion,
    skips_adjacent,
    swap_bijection,
    triple_of_path,
)

__version__ = "0.1.0"
