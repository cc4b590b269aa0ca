"""All 2**n subsets of {1..n} as 0/1 flag vectors.

Flag k of serial s is ((s - 1 + 2**k) mod 2**(k+2)) // 2**(k+1). Successive
serials differ in a single flag (reflected binary Gray order, flags read
least significant first).
"""

from typing import Sequence

from .numerics import check_serial


def count_subsets(n: int) -> int:
    if n < 0:
        raise ValueError(f"set size must be >= 0, got {n}")
    return 1 << n


def check_mask(p: Sequence[int]) -> None:
    for i, flag in enumerate(p):
        if flag not in (0, 1):
            raise ValueError(f"flag {i} is {flag!r}, must be 0 or 1")


def unrank_subset(s: int, n: int) -> tuple[int, ...]:
    check_serial(s, count_subsets(n))
    # (v mod 2**(k+2)) // 2**(k+1) is bit k+1 of v
    return tuple(((s - 1 + (1 << k)) >> (k + 1)) & 1 for k in range(n))


def rank_subset(p: Sequence[int]) -> int:
    check_mask(p)
    s = 1
    direct = True
    for i in range(len(p) - 1, -1, -1):
        if (p[i] == 1) != direct:
            direct = True
        else:
            direct = False
            s += 1 << i
    return s


def mask_to_set(p: Sequence[int]) -> frozenset[int]:
    check_mask(p)
    return frozenset(i + 1 for i, flag in enumerate(p) if flag)
