import pytest

from serialrank.subset import count_subsets, mask_to_set, rank_subset, unrank_subset

from oracles import gray_reflect


def eq40(s, n):
    return tuple(((s - 1 + 2**k) % 2 ** (k + 2)) // 2 ** (k + 1) for k in range(n))


@pytest.mark.parametrize("n, expected", [(0, 1), (3, 8), (5, 32)])
def test_count(n, expected):
    assert count_subsets(n) == expected


@pytest.mark.parametrize("s, n, p", [(1, 4, (0, 0, 0, 0)), (5, 3, (0, 1, 1)), (2, 3, (1, 0, 0))])
def test_unrank_and_rank(s, n, p):
    assert unrank_subset(s, n) == p
    assert rank_subset(p) == s


def test_empty_ground_set():
    assert unrank_subset(1, 0) == ()
    assert rank_subset(()) == 1


def test_mask_to_set():
    assert mask_to_set((1, 0, 1, 1, 0)) == {1, 3, 4}


@pytest.mark.parametrize("n", range(0, 17))
def test_exhaustive_against_gray_oracle(n):
    words = gray_reflect(n)
    assert len(words) == count_subsets(n)
    for s, w in enumerate(words, start=1):
        assert unrank_subset(s, n) == w
        assert rank_subset(w) == s
    for a, b in zip(words, words[1:]):
        assert sum(x != y for x, y in zip(a, b)) == 1


@pytest.mark.parametrize("n", [0, 1, 5, 9])
def test_matches_closed_form_arithmetic(n):
    for s in range(1, 2**n + 1):
        assert unrank_subset(s, n) == eq40(s, n)


def test_large():
    n = 300
    for s in (1, 2, 2**299 + 12345, 2**n):
        assert rank_subset(unrank_subset(s, n)) == s
        assert unrank_subset(s, n) == eq40(s, n)


@pytest.mark.parametrize(
    "call", [lambda: rank_subset((0, 2)), lambda: unrank_subset(9, 3), lambda: count_subsets(-1)]
)
def test_errors(call):
    with pytest.raises(ValueError):
        call()
