"""Brute-force helpers that deliberately avoid the package under test."""

from itertools import combinations, product
from math import factorial

import pytest


def comb(p, q):
    if q > p:
        return 0
    return factorial(p) // (factorial(q) * factorial(p - q))


def brute_losing_multisets(n, k):
    """Sorted losing-score tuples of every loser choice, by direct enumeration."""
    subsets = list(combinations(range(n), k))
    out = set()
    for choice in product(*subsets):
        r = [0] * n
        for v in choice:
            r[v] += 1
        out.add(tuple(sorted(r)))
    return out


def tournament_score_sequences(n):
    """Sorted win counts of all 2^C(n,2) tournaments on n players."""
    pairs = list(combinations(range(n), 2))
    out = set()
    for bits in product((0, 1), repeat=len(pairs)):
        wins = [0] * n
        for (a, b), bit in zip(pairs, bits):
            wins[a if bit else b] += 1
        out.add(tuple(sorted(wins)))
    return out


def nondecreasing(n, hi):
    """All non-decreasing tuples of length n with entries in 0..hi."""
    if n == 0:
        yield ()
        return
    for rest in nondecreasing(n - 1, hi):
        low = rest[-1] if rest else 0
        for v in range(low, hi + 1):
            yield (*rest, v)


@pytest.fixture(scope="session")
def brute():
    return brute_losing_multisets
