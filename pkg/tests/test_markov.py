import math

import pytest

from markovnecklaces.markov import (
    MarkovTriple,
    is_markov_triple,
    markov_numbers,
    triples_up_to,
    uniqueness_scan,
)

FIRST_13 = [1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985]


def brute_force_markov_numbers(limit):
    """Independent oracle: solve the quadratic in z for every x <= y <= limit."""
    out = set()
    for x in range(1, limit + 1):
        for y in range(x, limit + 1):
            disc = 9 * x * x * y * y - 4 * (x * x + y * y)
            if disc < 0:
                continue
            root = math.isqrt(disc)
            if root * root != disc:
                continue
            for z2 in ((3 * x * y + root), (3 * x * y - root)):
                if z2 % 2 == 0 and z2 // 2 >= y and z2 // 2 <= limit:
                    out.add(z2 // 2)
    return sorted(out)


def test_is_markov_triple_examples():
    assert is_markov_triple(1, 1, 1)
    assert is_markov_triple(1, 2, 5)
    assert not is_markov_triple(1, 2, 3)
    assert not is_markov_triple(0, 1, 1)


def test_constructor_validates():
    MarkovTriple(1, 2, 5)
    with pytest.raises(ValueError):
        MarkovTriple(1, 2, 3)
    with pytest.raises(ValueError):
        MarkovTriple(5, 2, 1)  # unsorted
    assert MarkovTriple.of(5, 1, 2) == MarkovTriple(1, 2, 5)


def test_children_examples():
    assert MarkovTriple(1, 1, 2) in MarkovTriple(1, 1, 1).children()
    assert MarkovTriple(1, 2, 5) in MarkovTriple(1, 1, 2).children()
    kids = MarkovTriple(1, 2, 5).children()
    assert MarkovTriple(2, 5, 29) in kids and MarkovTriple(1, 5, 13) in kids


def test_markov_numbers_examples():
    assert markov_numbers(1) == [1]
    assert markov_numbers(10) == [1, 2, 5]
    assert markov_numbers(1000) == FIRST_13


def test_markov_numbers_against_bruteforce():
    assert markov_numbers(300) == brute_force_markov_numbers(300)


def test_prefix_consistency():
    big = markov_numbers(10**5)
    for bound in (1, 10, 1000, 9077):
        small = markov_numbers(bound)
        assert small == [v for v in big if v <= bound]


def test_tree_visits_each_triple_once_with_unique_parent():
    triples = list(triples_up_to(10**5))
    assert len(triples) == len(set(triples))
    for t in triples:
        if t == MarkovTriple(1, 1, 1):
            continue
        parent = MarkovTriple.of(t.x, t.y, 3 * t.x * t.y - t.z)
        assert parent.z <= t.z
        assert parent in set(triples)


def test_uniqueness_scan_clean():
    assert uniqueness_scan(1) == []
    assert uniqueness_scan(5) == []
    assert uniqueness_scan(10**6) == []


def test_bound_validation():
    with pytest.raises(ValueError):
        markov_numbers(0)
