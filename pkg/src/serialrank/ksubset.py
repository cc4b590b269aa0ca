"""k-element subsets of {1..n} in lexicographic order.

The walk keeps three numbers: ``x`` elements still available above the
last pick, ``y`` picks still owed after the current one, and ``label`` the
last element chosen. Choosing label + j next leaves C(x - j, y) subsets.
"""

from typing import Iterator, Sequence

from .numerics import binomial, check_serial

MAX_GENERATOR_N = 20


def count_ksubsets(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError(f"k-subsets need 0 <= k <= n, got n={n}, k={k}")
    return binomial(n, k)


def check_ksubset(p: Sequence[int], n: int) -> None:
    if len(p) > n:
        raise ValueError(f"{len(p)} elements cannot fit in a {n}-set")
    prev = 0
    for e in p:
        if e <= prev:
            raise ValueError(f"{tuple(p)} is not strictly increasing from 1")
        prev = e
    if p and p[-1] > n:
        raise ValueError(f"element {p[-1]} exceeds n={n}")


def unrank_ksubset(s: int, n: int, k: int) -> tuple[int, ...]:
    check_serial(s, count_ksubsets(n, k))
    x, y = n, k - 1
    acc = label = 0
    out = []
    for _ in range(k):
        # the last candidate (j == x - y) is forced once s is in range
        for j in range(1, x - y + 1):
            size = binomial(x - j, y)
            if acc + size < s:
                acc += size
            else:
                break
        x -= j
        y -= 1
        label += j
        out.append(label)
    return tuple(out)


def rank_ksubset(p: Sequence[int], n: int) -> int:
    check_ksubset(p, n)
    x, y = n, len(p) - 1
    s = 1
    label = 0
    for e in p:
        for j in range(1, e - label):
            s += binomial(x - j, y)
        x -= e - label
        y -= 1
        label = e
    return s


def generate_ksubsets_lex(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Recursively yield every k-subset of {1..n} in lexicographic order.

    Slot i takes values from one past the previous slot up to n - (k - i) + 1.
    Only meant for checking; n is capped at MAX_GENERATOR_N.
    """
    count_ksubsets(n, k)
    if n > MAX_GENERATOR_N:
        raise ValueError(f"recursive generator limited to n <= {MAX_GENERATOR_N}")
    chosen: list[int] = []

    def combine(i: int, low: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            yield tuple(chosen)
            return
        for e in range(low, n - (k - i) + 2):
            chosen.append(e)
            yield from combine(i + 1, e + 1)
            chosen.pop()

    yield from combine(0, 1)
