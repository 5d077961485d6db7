import math
import random

import numpy as np
import pytest

from bidicpp.matching import greedy_match, hungarian_min_perfect, max_match_min_cost
from bidicpp.oracle import oracle_min_perfect_match

INF = math.inf


def test_hungarian_examples():
    m = hungarian_min_perfect([[1, 2], [2, 4]])
    assert sorted(m.pairs) == [(0, 1), (1, 0)] and m.total_cost == 4
    assert hungarian_min_perfect([[0, INF], [INF, 0]]).total_cost == 0
    assert hungarian_min_perfect([[INF, INF], [1, 1]]) is None


def test_hungarian_rejects_negative_cost():
    with pytest.raises(ValueError):
        hungarian_min_perfect([[-1]])


def test_max_match_examples():
    m = max_match_min_cost([[INF, INF], [1, 1]])
    assert (m.size, m.total_cost) == (1, 1)
    m = max_match_min_cost(np.full((3, 3), INF))
    assert (m.size, m.total_cost) == (0, 0)
    m = max_match_min_cost([[1, 2], [2, 4]])
    assert (m.size, m.total_cost) == (2, 4)


def test_max_match_rectangular():
    m = max_match_min_cost([[3, 1, 2]])
    assert m.pairs == ((0, 1),) and m.total_cost == 1


def test_greedy_examples():
    m = greedy_match([[1, 2], [2, 4]])
    assert sorted(m.pairs) == [(0, 0), (1, 1)] and m.total_cost == 5
    assert greedy_match([[1, INF], [INF, 1]]).total_cost == 2
    assert greedy_match([[7]]).total_cost == 7


def test_hungarian_matches_oracle_small():
    rng = random.Random(1)
    for _ in range(200):
        n = rng.randint(1, 5)
        c = [[INF if rng.random() < 0.3 else rng.randint(0, 9) for _ in range(n)] for _ in range(n)]
        m = hungarian_min_perfect(c)
        ref = oracle_min_perfect_match(c)
        assert (m is None) == (ref is None)
        if m is not None:
            assert m.total_cost == ref


def test_max_match_size_is_maximum():
    # size must equal the perfect matching size whenever one exists
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(1, 5)
        c = [[INF if rng.random() < 0.5 else rng.randint(0, 9) for _ in range(n)] for _ in range(n)]
        m = max_match_min_cost(c)
        if oracle_min_perfect_match(c) is not None:
            assert m.size == n
        assert greedy_match(c).size <= m.size
