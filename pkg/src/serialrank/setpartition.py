"""Set partitions of {1..n} as restricted growth strings.

Element i (0-based) gets a block index p[i]; p[0] = 0 and each later index
is at most one above the running maximum. Ranking walks an implicit Bell
tree whose subtree sizes live in a triangular table D:

    D[v][0] = B(n - v)
    D[u][v] = D[u][v-1] - v * D[u+1][v-1]

D[u][v] counts the completions below one child when u elements have
joined an existing block so far and v + 1 blocks are open.
"""

from functools import lru_cache
from typing import Sequence

from .numerics import bell, check_serial

DMatrix = tuple[tuple[int, ...], ...]


@lru_cache(maxsize=64)
def build_d_matrix(n: int) -> DMatrix:
    if n < 1:
        raise ValueError(f"set size must be >= 1, got {n}")
    rows = [[bell(n - u)] for u in range(n)]
    for v in range(1, n):
        for u in range(n - v):
            rows[u].append(rows[u][v - 1] - v * rows[u + 1][v - 1])
    return tuple(tuple(r) for r in rows)


def count_setpartitions(n: int) -> int:
    if n < 1:
        raise ValueError(f"set size must be >= 1, got {n}")
    return bell(n)


def check_partition(p: Sequence[int]) -> None:
    if len(p) < 1:
        raise ValueError("partition vector must be non-empty")
    if p[0] != 0:
        raise ValueError(f"partition vector must start with 0, got {p[0]}")
    top = 0
    for i, b in enumerate(p[1:], start=1):
        if not 0 <= b <= top + 1:
            raise ValueError(
                f"restricted growth violated at element {i}: {b} not in [0, {top + 1}]"
            )
        top = max(top, b)


def unrank_setpartition(s: int, n: int) -> tuple[int, ...]:
    check_serial(s, count_setpartitions(n))
    d = build_d_matrix(n)
    u = v = 0
    acc = 0
    p = []
    for _ in range(n):
        for t in range(v + 1):
            if acc + d[u][v] >= s:
                u += 1
                p.append(t)
                break
            acc += d[u][v]
        else:
            v += 1
            p.append(v)
    return tuple(p)


def rank_setpartition(p: Sequence[int]) -> int:
    check_partition(p)
    d = build_d_matrix(len(p))
    u, v = 1, 0
    s = 1
    for b in p[1:]:
        s += b * d[u][v]
        if b <= v:
            u += 1
        else:
            v += 1
    return s


def stylize(p: Sequence[int]) -> str:
    """Render a partition vector as e.g. ``(1, 4, 5)(2, 3)``."""
    check_partition(p)
    blocks: list[list[int]] = [[] for _ in range(max(p) + 1)]
    for element, b in enumerate(p, start=1):
        blocks[b].append(element)
    return "".join("(" + ", ".join(map(str, blk)) + ")" for blk in blocks if blk)


def parse_stylized(text: str) -> tuple[int, ...]:
    """Inverse of :func:`stylize`; blocks are relabelled by first element."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"not a stylized partition: {text!r}")
    groups = [[int(x) for x in g.split(",")] for g in text[1:-1].split(")(")]
    n = sum(len(g) for g in groups)
    if sorted(x for g in groups for x in g) != list(range(1, n + 1)):
        raise ValueError(f"stylized partition does not cover 1..{n}: {text!r}")
    groups.sort(key=min)
    p = [0] * n
    for b, g in enumerate(groups):
        for x in g:
            p[x - 1] = b
    return tuple(p)
