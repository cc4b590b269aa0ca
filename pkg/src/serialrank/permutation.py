"""Permutations of {1..m} ranked in the inversion-vector zigzag order.

A permutation p maps to an offset vector d of length m - 1, where d[k-1]
counts the entries among p[0..k-1] larger than p[k]. Digit k (1-based)
lives in {0..k} and sweeps up and down within blocks of (k+1)! serials,
upward on even blocks ("direct") and downward on odd ones ("inverted").
This is the order produced by the classic Next Permutation routine::

    >>> unrank_permutation(7, 4)
    (4, 2, 1, 3)
    >>> rank_permutation((3, 2, 4, 1))
    23
"""

from math import factorial
from typing import Sequence

from .numerics import check_serial


def count_permutations(m: int) -> int:
    if m < 1:
        raise ValueError(f"permutation size must be >= 1, got {m}")
    return factorial(m)


def check_offset(d: Sequence[int]) -> None:
    for k, dk in enumerate(d, start=1):
        if not 0 <= dk <= k:
            raise ValueError(f"offset entry {k} is {dk}, must lie in [0, {k}]")


def check_permutation(p: Sequence[int]) -> None:
    m = len(p)
    if m < 1:
        raise ValueError("permutation must be non-empty")
    if sorted(p) != list(range(1, m + 1)):
        raise ValueError(f"{tuple(p)} is not a permutation of 1..{m}")


def serial_to_offset(s: int, m: int) -> tuple[int, ...]:
    check_serial(s, count_permutations(m))
    s -= 1
    d = []
    for k in range(1, m):
        block, within = divmod(s, factorial(k + 1))
        digit = within // factorial(k)
        d.append(k - digit if block % 2 else digit)
    return tuple(d)


def offset_to_permutation(d: Sequence[int]) -> tuple[int, ...]:
    """Decode an offset vector.

    Positions are inserted one at a time into a chain ordered by value;
    position k+1 goes in with exactly d[k-1] chain members above it. The
    final chain order then hands out the values 1..m.
    """
    check_offset(d)
    chain = [0]
    for pos, dk in enumerate(d, start=1):
        chain.insert(len(chain) - dk, pos)
    p = [0] * len(chain)
    for value, pos in enumerate(chain, start=1):
        p[pos] = value
    return tuple(p)


def permutation_to_offset(p: Sequence[int]) -> tuple[int, ...]:
    check_permutation(p)
    return tuple(
        sum(1 for j in range(i + 1) if p[j] > p[i + 1]) for i in range(len(p) - 1)
    )


def offset_to_serial(d: Sequence[int]) -> int:
    """Rank an offset vector by walking it from the most significant digit.

    The top digit is always on a direct sweep. Going down one digit, the
    sweep direction flips exactly when the digit just consumed is odd.
    """
    check_offset(d)
    s = 0
    direct = True
    for k in range(len(d), 0, -1):
        dk = d[k - 1]
        s += (dk if direct else k - dk) * factorial(k)
        if dk % 2:
            direct = not direct
    return s + 1


def unrank_permutation(s: int, m: int) -> tuple[int, ...]:
    return offset_to_permutation(serial_to_offset(s, m))


def rank_permutation(p: Sequence[int]) -> int:
    return offset_to_serial(permutation_to_offset(p))
