"""Subset combinatorics: frozen/weak separation/crossing predicates,
compatibility degree, and the noncrossing complex."""
import random
from itertools import combinations
from math import comb

import pytest

from grascat.combinat import (catalan_mdim, compatibility_degree,
                              enumerate_maximal_noncrossing, is_crossing,
                              is_frozen, is_noncrossing, is_weakly_separated,
                              k3_exponent_rule, nonfrozen_subsets)


def test_frozen():
    assert is_frozen((1, 2, 3), 6)
    assert is_frozen((1, 5, 6), 6)
    assert not is_frozen((1, 3, 5), 6)
    assert is_frozen((1, 2, 7, 8), 8)


def test_weak_separation():
    assert is_weakly_separated((1, 2), (3, 4), 4)
    assert not is_weakly_separated((1, 3), (2, 4), 4)
    assert not is_weakly_separated((1, 4, 5), (2, 3, 6), 6)


def test_weak_separation_cyclic_invariance():
    rng = random.Random(0)
    n = 8
    for _ in range(200):
        I = tuple(sorted(rng.sample(range(1, n + 1), 3)))
        J = tuple(sorted(rng.sample(range(1, n + 1), 3)))
        w = is_weakly_separated(I, J, n)
        for r in range(1, n):
            Ir = tuple(sorted((x + r - 1) % n + 1 for x in I))
            Jr = tuple(sorted((x + r - 1) % n + 1 for x in J))
            assert is_weakly_separated(Ir, Jr, n) == w


def test_compatibility_degree_values():
    assert compatibility_degree((1, 3, 5), (2, 4, 6), 6) == 2
    assert compatibility_degree((2, 4, 6, 8), (1, 3, 5, 7), 8) == 3
    assert compatibility_degree((1, 2, 4), (3, 5, 6), 6) == 0
    assert compatibility_degree((2, 4, 6, 8), (1, 2, 4, 7), 8) == 1
    # the exponent-2 correction factors of the (4,8) worked identity
    for I in ((1, 2, 4, 7), (1, 2, 5, 7), (1, 3, 4, 7), (1, 3, 5, 7)):
        assert compatibility_degree(I, (2, 3, 6, 8), 8) == 2


def test_compatibility_symmetry():
    rng = random.Random(1)
    for _ in range(300):
        n = rng.randint(6, 10)
        k = rng.randint(2, n - 2)
        I = tuple(sorted(rng.sample(range(1, n + 1), k)))
        J = tuple(sorted(rng.sample(range(1, n + 1), k)))
        assert compatibility_degree(I, J, n) == compatibility_degree(J, I, n)


def test_noncrossing_examples():
    assert is_noncrossing((1, 4, 5), (2, 3, 6), 6)
    assert not is_noncrossing((1, 3, 5), (2, 4, 6), 6)
    assert is_noncrossing((6, 7, 8, 15), (1, 6, 9, 10), 16)
    assert is_noncrossing((6, 7, 8, 15), (1, 3, 5, 6), 16)
    assert is_crossing((6, 7, 8, 15), (1, 3, 8, 9), 16)


def test_nonfrozen_counts():
    assert len(nonfrozen_subsets(3, 6)) == 14
    assert len(nonfrozen_subsets(2, 5)) == 5
    assert len(nonfrozen_subsets(4, 8)) == 62


def test_catalan():
    assert catalan_mdim(2, 2) == 2
    assert catalan_mdim(3, 3) == 42
    assert catalan_mdim(4, 4) == 24024
    assert [catalan_mdim(2, m) for m in range(2, 7)] == [2, 5, 14, 42, 132]


def test_k3_exponent_rule():
    assert k3_exponent_rule((1, 3, 5), (2, 4, 6)) == 2
    assert k3_exponent_rule((1, 2, 4), (3, 5, 6)) == 0
    assert k3_exponent_rule((1, 3, 4), (2, 3, 5)) == 1


@pytest.mark.parametrize("n", [6, 7, 8, 9])
def test_k3_exponent_rule_is_compat_degree(n):
    nf = nonfrozen_subsets(3, n)
    for I, J in combinations(nf, 2):
        assert compatibility_degree(I, J, n) == k3_exponent_rule(I, J)


@pytest.mark.parametrize("k,n,count,size", [
    (2, 5, 5, 2), (2, 6, 14, 3), (3, 6, 42, 4), (2, 7, 42, 4), (3, 7, 462, 6),
])
def test_maximal_collections(k, n, count, size):
    cols = enumerate_maximal_noncrossing(k, n)
    assert len(cols) == count
    assert all(len(c) == size for c in cols)
    assert len(set(cols)) == count


@pytest.mark.parametrize("n", [6, 7, 8])
def test_noncrossing_not_ws_count(n):
    nf = nonfrozen_subsets(3, n)
    cnt = sum(1 for I, J in combinations(nf, 2)
              if is_noncrossing(I, J, n) and not is_weakly_separated(I, J, n))
    assert cnt == 2 * comb(n, 6)


def test_compat_support_count_5_14():
    J = (2, 4, 6, 8, 12)
    cnt = sum(1 for I in combinations(range(1, 15), 5)
              if I != J and compatibility_degree(I, J, 14) > 0)
    assert cnt == 1293
