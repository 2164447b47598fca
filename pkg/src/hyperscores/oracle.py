"""Exhaustive ground truth at small n and k, plus seeded random instances.

Losing scores only depend on which vertex is last in each arc, so the
enumerations below range over loser assignments (``k ** C(n, k)`` of them)
rather than over full arc orderings.
"""

from __future__ import annotations

import random
from collections.abc import Iterator
from itertools import combinations, product

from .core import (
    Arc,
    Hypertournament,
    HypertournamentError,
    LoserAssignment,
    LosingScoreSequence,
    arcs_per_vertex,
    binom,
    canonical_arc,
    k_subsets,
)

DEFAULT_BUDGET = 10**8


class BudgetExceededError(HypertournamentError):
    pass


def assignment_count(n: int, k: int) -> int:
    return k ** binom(n, k)


def _check_budget(n: int, k: int, budget: int) -> None:
    if n < 0 or k < 2:
        raise ValueError(f"need n >= 0 and k >= 2, got n={n}, k={k}")
    count = assignment_count(n, k)
    if count > budget:
        raise BudgetExceededError(f"{k}^C({n},{k}) = {count} loser assignments exceed the budget of {budget}")


def enumerate_assignments(n: int, k: int, budget: int = DEFAULT_BUDGET) -> Iterator[LoserAssignment]:
    """Yield every loser assignment on ``n`` vertices exactly once."""
    _check_budget(n, k, budget)
    subsets = k_subsets(n, k)
    for choice in product(*subsets):
        yield LoserAssignment(n, k, dict(zip(subsets, choice)))


def achievable_losing_multisets(
    n: int, k: int, budget: int = DEFAULT_BUDGET, method: str = "brute"
) -> set[LosingScoreSequence]:
    """All sorted losing score vectors that some hypertournament attains.

    ``method="brute"`` walks every loser assignment (subject to ``budget``).
    ``method="dp"`` computes the same image set by extending the reachable
    per-vertex loss vectors one subset at a time, which stays small enough
    to handle cases such as n=6, k=4 (4^15 assignments) or n=7, k=3.
    """
    if method == "brute":
        _check_budget(n, k, budget)
        subsets = k_subsets(n, k)
        found: set[tuple[int, ...]] = set()
        for choice in product(*subsets):
            r = [0] * n
            for v in choice:
                r[v] += 1
            found.add(tuple(sorted(r)))
    elif method == "dp":
        if n < 0 or k < 2:
            raise ValueError(f"need n >= 0 and k >= 2, got n={n}, k={k}")
        base = arcs_per_vertex(n, k) + 1
        found = {tuple(sorted(_unpack(s, n, base))) for s in _reachable_states(n, k, base)}
    else:
        raise ValueError(f"unknown method {method!r}")
    return {LosingScoreSequence(n, k, vals) for vals in found}


def _unpack(state: int, n: int, base: int) -> list[int]:
    digits = []
    for _ in range(n):
        state, d = divmod(state, base)
        digits.append(d)
    return digits


def _pack(digits: list[int], base: int) -> int:
    state = 0
    for d in reversed(digits):
        state = state * base + d
    return state


def _reachable_states(n: int, k: int, base: int) -> set[int]:
    """Loss vectors reachable by choosing a loser in every subset.

    Digit ``v`` of a state (in the given base) is the loss count of vertex
    ``v``. Subsets are taken grouped by their largest vertex ``t``; once a
    group is done, every remaining subset treats ``0..t`` alike, so those
    digits can be sorted without changing the final sorted image.
    """
    weight = [base**v for v in range(n)]
    states = {0}
    for t in range(k - 1, n):
        for head in combinations(range(t), k - 1):
            steps = [weight[v] for v in (*head, t)]
            states = {s + w for s in states for w in steps}
        canon = set()
        for s in states:
            digits = _unpack(s, n, base)
            digits[: t + 1] = sorted(digits[: t + 1])
            canon.add(_pack(digits, base))
        states = canon
    return states


def enumerate_valid(n: int, k: int) -> set[LosingScoreSequence]:
    """Every non-decreasing sequence meeting the prefix-sum condition.

    Backtracking keeps partial sums at or above ``C(j, k)`` and prunes
    branches whose remaining total cannot be reached with non-decreasing
    entries capped at ``C(n-1, k-1)``.
    """
    if n < 0 or k < 2:
        raise ValueError(f"need n >= 0 and k >= 2, got n={n}, k={k}")
    total = binom(n, k)
    cap = arcs_per_vertex(n, k)
    out: set[LosingScoreSequence] = set()
    prefix: list[int] = []

    def extend(j: int, acc: int, low: int) -> None:
        if j == n:
            if acc == total:
                out.add(LosingScoreSequence(n, k, tuple(prefix)))
            return
        left = n - j
        for v in range(low, cap + 1):
            rest = total - acc - v
            if rest < (left - 1) * v:
                break
            if rest > (left - 1) * cap:
                continue
            if acc + v < binom(j + 1, k):
                continue
            prefix.append(v)
            extend(j + 1, acc + v, v)
            prefix.pop()

    extend(0, 0, 0)
    return out


def random_hypertournament(n: int, k: int, rng: random.Random, shuffle: bool = False) -> Hypertournament:
    """Pick a uniform loser for each subset independently.

    With ``shuffle`` the non-losing positions of every arc are permuted too;
    otherwise they are listed in ascending order.
    """
    arcs = []
    for s in k_subsets(n, k):
        loser = rng.choice(s)
        arc = canonical_arc(s, loser)
        if shuffle:
            rest = list(arc.vertices[:-1])
            rng.shuffle(rest)
            arc = Arc((*rest, loser))
        arcs.append(arc)
    return Hypertournament(n, k, tuple(arcs))


def sample(n: int, k: int, seed: int) -> Hypertournament:
    return random_hypertournament(n, k, random.Random(seed))
