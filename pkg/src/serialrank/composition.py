"""Weak compositions of n into k ordered parts.

Serials order compositions by the last part first (ascending), then the
next-to-last, and so on; the first part is whatever is left over. The
walk skips whole blocks of compositions by binomial counts: with R units
still to place and the part at 0-based row i being decided, fixing that
part to j leaves C(R - j + k - 2 - i, R - j) compositions for the parts
to its left.
"""

from typing import Sequence

from .numerics import binomial, check_serial


def count_compositions(n: int, k: int) -> int:
    if n < 0 or k < 1:
        raise ValueError(f"compositions need n >= 0 and k >= 1, got n={n}, k={k}")
    return binomial(n + k - 1, n)


def _block(remaining: int, j: int, k: int, row: int) -> int:
    return binomial(remaining - j + k - 2 - row, remaining - j)


def check_composition(c: Sequence[int], n: int | None = None) -> None:
    if len(c) < 1:
        raise ValueError("composition needs at least one part")
    if any(part < 0 for part in c):
        raise ValueError(f"composition {tuple(c)} has a negative part")
    if n is not None and sum(c) != n:
        raise ValueError(f"composition {tuple(c)} sums to {sum(c)}, expected {n}")


def unrank_composition(s: int, n: int, k: int) -> tuple[int, ...]:
    check_serial(s, count_compositions(n, k))
    target = s - 1
    acc = 0
    remaining = n
    c = [0] * k
    for row in range(k - 1):
        part = remaining
        for j in range(remaining):
            size = _block(remaining, j, k, row)
            if acc + size <= target:
                acc += size
            else:
                part = j
                break
        c[k - 1 - row] = part
        remaining -= part
    c[0] = remaining
    return tuple(c)


def rank_composition(c: Sequence[int], n: int | None = None) -> int:
    check_composition(c, n)
    k = len(c)
    remaining = sum(c)
    s = 1
    for row in range(k - 1):
        part = c[k - 1 - row]
        for j in range(part):
            s += _block(remaining, j, k, row)
        remaining -= part
    return s
