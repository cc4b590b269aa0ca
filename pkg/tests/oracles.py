"""Brute-force reference enumerations, deliberately independent of serialrank."""

from itertools import product


def factorial_by_multiplication(m):
    out = 1
    for i in range(2, m + 1):
        out *= i
    return out


def pascal_row(a):
    row = [1]
    for _ in range(a):
        row = [x + y for x, y in zip([0] + row, row + [0])]
    return row


def binomial_pascal(a, b):
    if b < 0 or b > a:
        return 0
    return pascal_row(a)[b]


def lex_permutations(m):
    """All permutations of 1..m via the textbook next-lexicographic successor."""
    p = list(range(1, m + 1))
    while True:
        yield tuple(p)
        i = m - 2
        while i >= 0 and p[i] > p[i + 1]:
            i -= 1
        if i < 0:
            return
        j = m - 1
        while p[j] < p[i]:
            j -= 1
        p[i], p[j] = p[j], p[i]
        p[i + 1:] = reversed(p[i + 1:])


def inversion_counts(p):
    d = []
    for i in range(1, len(p)):
        c = 0
        for j in range(i):
            if p[j] > p[i]:
                c += 1
        d.append(c)
    return tuple(d)


def offset_digit_joined(s, k):
    """The single-formula offset digit: f*k + (-1)**f * floor(...)."""
    f = ((s - 1) // factorial_by_multiplication(k + 1)) % 2
    q = ((s - 1) % factorial_by_multiplication(k + 1)) // factorial_by_multiplication(k)
    return f * k + (-1) ** f * q


def compositions_reversed_lex(n, k):
    comps = [c for c in product(range(n + 1), repeat=k) if sum(c) == n]
    return sorted(comps, key=lambda c: c[::-1])


def restricted_growth_strings(n):
    out = []

    def grow(prefix, top):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for b in range(top + 2):
            grow(prefix + [b], max(top, b))

    grow([0], 0)
    return out


def ksubsets_sorted(n, k):
    subsets = [
        tuple(i + 1 for i in range(n) if mask >> i & 1)
        for mask in range(1 << n)
        if bin(mask).count("1") == k
    ]
    return sorted(subsets)


def gray_reflect(n):
    """Reflected binary Gray code words as LSB-first flag tuples.

    Built by prefix-and-reflect: G(n) = 0.G(n-1) then 1.reverse(G(n-1)),
    where the new bit is the most significant (last in LSB-first order).
    """
    words = [()]
    for _ in range(n):
        words = [w + (0,) for w in words] + [w + (1,) for w in reversed(words)]
    return words


def bell_by_stirling_sum(n):
    from math import comb, factorial

    total = 0
    for k in range(1, n + 1):
        alt = sum((-1) ** i * comb(k, i) * (k - i) ** n for i in range(k))
        assert alt % factorial(k) == 0
        total += alt // factorial(k)
    return total
