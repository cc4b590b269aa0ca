"""Exact integer counting functions shared by every family.

Everything here works on Python ints, so nothing overflows.
"""

import math


def factorial(m: int) -> int:
    if m < 0:
        raise ValueError(f"factorial needs m >= 0, got {m}")
    return math.factorial(m)


def binomial(a: int, b: int) -> int:
    """C(a, b), with 0 for b < 0 or b > a."""
    if a < 0:
        raise ValueError(f"binomial needs a >= 0, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via the alternating sum.

    The sum is accumulated as an integer and divided by k! once at the end.
    """
    if not 1 <= k <= n:
        raise ValueError(f"stirling2 needs 1 <= k <= n, got n={n}, k={k}")
    total = sum((-1) ** i * math.comb(k, i) * (k - i) ** n for i in range(k))
    q, r = divmod(total, math.factorial(k))
    assert r == 0, "alternating sum not divisible by k!"
    return q


def bell(n: int) -> int:
    """Bell number B_n, computed with the Bell triangle."""
    if n < 1:
        raise ValueError(f"bell needs n >= 1, got {n}")
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]


def check_serial(s: int, count: int) -> None:
    if not isinstance(s, int) or isinstance(s, bool):
        raise TypeError(f"serial must be an int, got {type(s).__name__}")
    if not 1 <= s <= count:
        raise ValueError(f"serial {s} out of range [1, {count}]")
