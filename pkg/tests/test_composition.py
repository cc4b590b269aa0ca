import pytest
from hypothesis import given, strategies as st

from serialrank.composition import count_compositions, rank_composition, unrank_composition
from serialrank.numerics import binomial

from oracles import compositions_reversed_lex

SMALL = [(n, k) for n in range(0, 12) for k in range(1, 13 - n)]


@pytest.mark.parametrize("n, k, expected", [(7, 5, 330), (9, 1, 1), (0, 4, 1)])
def test_count(n, k, expected):
    assert count_compositions(n, k) == expected


@pytest.mark.parametrize(
    "s, n, k, c",
    [(283, 7, 5, (1, 0, 2, 1, 3)), (1, 7, 5, (7, 0, 0, 0, 0)), (330, 7, 5, (0, 0, 0, 0, 7))],
)
def test_unrank_and_rank(s, n, k, c):
    assert unrank_composition(s, n, k) == c
    assert rank_composition(c, n) == s


def test_degenerate_shapes():
    assert unrank_composition(1, 5, 1) == (5,)
    assert rank_composition((5,)) == 1
    assert unrank_composition(1, 0, 3) == (0, 0, 0)
    assert rank_composition((0, 0, 0)) == 1


@pytest.mark.parametrize("n, k", SMALL)
def test_exhaustive_against_reversed_lex_oracle(n, k):
    expected = compositions_reversed_lex(n, k)
    assert len(expected) == count_compositions(n, k)
    for s, c in enumerate(expected, start=1):
        assert unrank_composition(s, n, k) == c
        assert rank_composition(c) == s


def test_partial_sum_identity():
    for n in range(0, 11):
        for k in range(1, 11):
            row = sum(binomial(n + k - 2 - i, n - i) for i in range(n + 1)) if k >= 2 else 1
            assert row == binomial(n + k - 1, n)


@given(st.integers(0, 60), st.integers(1, 30), st.integers(1, 2**120))
def test_large_round_trip(n, k, raw):
    s = (raw - 1) % count_compositions(n, k) + 1
    c = unrank_composition(s, n, k)
    assert len(c) == k and sum(c) == n and min(c) >= 0
    assert rank_composition(c, n) == s


@pytest.mark.parametrize(
    "call",
    [
        lambda: unrank_composition(331, 7, 5),
        lambda: unrank_composition(0, 7, 5),
        lambda: rank_composition((1, -1, 7)),
        lambda: rank_composition((1, 2), 4),
        lambda: rank_composition(()),
        lambda: count_compositions(3, 0),
    ],
)
def test_errors(call):
    with pytest.raises(ValueError):
        call()
