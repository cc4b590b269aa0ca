"""Random access into the enumeration orders of five combinatorial families.

``unrank_*`` maps a 1-based serial to an object, ``rank_*`` maps it back.
"""

from .composition import count_compositions, rank_composition, unrank_composition
from .ksubset import count_ksubsets, generate_ksubsets_lex, rank_ksubset, unrank_ksubset
from .numerics import bell, binomial, factorial, stirling2
from .permutation import (
    count_permutations,
    offset_to_permutation,
    offset_to_serial,
    permutation_to_offset,
    rank_permutation,
    serial_to_offset,
    unrank_permutation,
)
from .setpartition import (
    build_d_matrix,
    count_setpartitions,
    rank_setpartition,
    stylize,
    unrank_setpartition,
)
from .subset import count_subsets, rank_subset, unrank_subset

__version__ = "0.1.0"
