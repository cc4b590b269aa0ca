"""Golden-value checks bundled with the library, run by ``serialrank selftest``."""

import sys
from typing import Callable, TextIO

from . import composition, ksubset, permutation, setpartition, subset
from .families import FAMILIES

# (serial, permutation, offset vector) for m = 4
TABLE2 = (
    (1, (1, 2, 3, 4), (0, 0, 0)),
    (2, (2, 1, 3, 4), (1, 0, 0)),
    (3, (3, 1, 2, 4), (1, 1, 0)),
    (4, (1, 3, 2, 4), (0, 1, 0)),
    (5, (2, 3, 1, 4), (0, 2, 0)),
    (6, (3, 2, 1, 4), (1, 2, 0)),
    (7, (4, 2, 1, 3), (1, 2, 1)),
    (8, (2, 4, 1, 3), (0, 2, 1)),
    (9, (1, 4, 2, 3), (0, 1, 1)),
    (10, (4, 1, 2, 3), (1, 1, 1)),
    (11, (2, 1, 4, 3), (1, 0, 1)),
    (12, (1, 2, 4, 3), (0, 0, 1)),
    (13, (1, 3, 4, 2), (0, 0, 2)),
    (14, (3, 1, 4, 2), (1, 0, 2)),
    (15, (4, 1, 3, 2), (1, 1, 2)),
    (16, (1, 4, 3, 2), (0, 1, 2)),
    (17, (3, 4, 1, 2), (0, 2, 2)),
    (18, (4, 3, 1, 2), (1, 2, 2)),
    (19, (4, 3, 2, 1), (1, 2, 3)),
    (20, (3, 4, 2, 1), (0, 2, 3)),
    (21, (2, 4, 3, 1), (0, 1, 3)),
    (22, (4, 2, 3, 1), (1, 1, 3)),
    (23, (3, 2, 4, 1), (1, 0, 3)),
    (24, (2, 3, 4, 1), (0, 0, 3)),
)

D_MATRIX_6 = (
    (203, 151, 77, 26, 6, 1),
    (52, 37, 17, 5, 1),
    (15, 10, 4, 1),
    (5, 3, 1),
    (2, 1),
    (1,),
)

# family -> (n, k) cases for the small exhaustive round trips
ROUND_TRIP_CASES = {
    "permutation": [(m, None) for m in range(1, 6)],
    "composition": [(n, k) for n in range(0, 5) for k in range(1, 5)],
    "setpartition": [(n, None) for n in range(1, 6)],
    "ksubset": [(n, k) for n in range(0, 7) for k in range(0, n + 1)],
    "subset": [(n, None) for n in range(0, 7)],
}


def check_table2() -> bool:
    return all(
        permutation.serial_to_offset(s, 4) == d
        and permutation.unrank_permutation(s, 4) == p
        and permutation.rank_permutation(p) == s
        for s, p, d in TABLE2
    )


def check_table1() -> bool:
    return (
        permutation.serial_to_offset(32, 5) == (0, 2, 2, 1)
        and permutation.unrank_permutation(32, 5) == (3, 5, 1, 2, 4)
        and permutation.rank_permutation((3, 5, 1, 2, 4)) == 32
    )


def check_serial23() -> bool:
    return (
        permutation.offset_to_serial((1, 0, 3)) == 23
        and permutation.offset_to_permutation((1, 0, 3)) == (3, 2, 4, 1)
    )


def check_composition_283() -> bool:
    return (
        composition.unrank_composition(283, 7, 5) == (1, 0, 2, 1, 3)
        and composition.rank_composition((1, 0, 2, 1, 3)) == 283
    )


def check_d_matrix() -> bool:
    return setpartition.build_d_matrix(6) == D_MATRIX_6


def check_partition_26() -> bool:
    p = setpartition.unrank_setpartition(26, 5)
    return (
        p == (0, 1, 1, 0, 0)
        and setpartition.stylize(p) == "(1, 4, 5)(2, 3)"
        and setpartition.rank_setpartition(p) == 26
    )


def check_small_examples() -> bool:
    return (
        ksubset.unrank_ksubset(4, 4, 2) == (2, 3)
        and ksubset.rank_ksubset((2, 3), 4) == 4
        and subset.unrank_subset(5, 3) == (0, 1, 1)
        and subset.rank_subset((0, 1, 1)) == 5
    )


def check_round_trips() -> bool:
    for name, cases in ROUND_TRIP_CASES.items():
        fam = FAMILIES[name]
        for n, k in cases:
            total = fam.count(n, k)
            seen = set()
            for s in range(1, total + 1):
                v = fam.unrank(s, n, k)
                if fam.rank(v, n, k) != s:
                    return False
                seen.add(v)
            if len(seen) != total:
                return False
    return True


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("permutation table n=4 (24 rows)", check_table2),
    ("permutation serial 32, n=5", check_table1),
    ("offset (1,0,3) -> serial 23", check_serial23),
    ("composition serial 283 of 7 into 5", check_composition_283),
    ("D matrix n=6", check_d_matrix),
    ("set partition serial 26, n=5 + stylized", check_partition_26),
    ("k-subset / subset examples", check_small_examples),
    ("small exhaustive round trips", check_round_trips),
]


def run_selftest(out: TextIO = sys.stdout) -> int:
    failed = []
    for name, check in CHECKS:
        try:
            ok = check()
        except Exception as exc:  # a crash is reported as a failed check
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        print(f"{'PASS' if ok else 'FAIL'}  {name}", file=out)
        if not ok:
            failed.append(name)
    if failed:
        print(f"{len(failed)} check(s) failed: {'; '.join(failed)}", file=out)
        return 1
    print("all checks passed", file=out)
    return 0
