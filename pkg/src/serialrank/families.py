"""Uniform (count, unrank, rank) access to every family, keyed by name."""

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import composition, ksubset, permutation, setpartition, subset

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Family:
    name: str
    needs_k: bool
    count: Callable[[int, Optional[int]], int]
    unrank: Callable[[int, int, Optional[int]], Vector]
    rank: Callable[[Sequence[int], int, Optional[int]], int]
    # (n, k) implied by a vector, or None where it cannot be inferred
    infer: Callable[[Sequence[int]], tuple[Optional[int], Optional[int]]]


def _rank_composition(c, n, k):
    return composition.rank_composition(c, n)


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in (
        Family(
            "permutation",
            False,
            lambda n, k: permutation.count_permutations(n),
            lambda s, n, k: permutation.unrank_permutation(s, n),
            lambda p, n, k: permutation.rank_permutation(p),
            lambda p: (len(p), None),
        ),
        Family(
            "composition",
            True,
            composition.count_compositions,
            composition.unrank_composition,
            _rank_composition,
            lambda c: (sum(c), len(c)),
        ),
        Family(
            "setpartition",
            False,
            lambda n, k: setpartition.count_setpartitions(n),
            lambda s, n, k: setpartition.unrank_setpartition(s, n),
            lambda p, n, k: setpartition.rank_setpartition(p),
            lambda p: (len(p), None),
        ),
        Family(
            "ksubset",
            True,
            ksubset.count_ksubsets,
            ksubset.unrank_ksubset,
            lambda p, n, k: ksubset.rank_ksubset(p, n),
            lambda p: (None, len(p)),
        ),
        Family(
            "subset",
            False,
            lambda n, k: subset.count_subsets(n),
            lambda s, n, k: subset.unrank_subset(s, n),
            lambda p, n, k: subset.rank_subset(p),
            lambda p: (len(p), None),
        ),
    )
}


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise ValueError(
            f"unknown family {name!r}; choose from {', '.join(FAMILIES)}"
        ) from None


def check_params(fam: Family, n: Optional[int], k: Optional[int]) -> None:
    if n is None:
        raise ValueError(f"{fam.name} needs --n")
    if fam.needs_k and k is None:
        raise ValueError(f"{fam.name} needs --k")
    if not fam.needs_k and k is not None:
        raise ValueError(f"{fam.name} does not take --k")
    # surfaces precondition errors (n < 1 etc.) as ValueError
    fam.count(n, k)
