import random

import pytest

from hyperscores.core import LosingScoreSequence, losing_scores, to_loser_assignment
from hyperscores.oracle import (
    BudgetExceededError,
    achievable_losing_multisets,
    assignment_count,
    enumerate_assignments,
    enumerate_valid,
    random_hypertournament,
    sample,
)
from hyperscores.verify import verify_losing

from conftest import brute_losing_multisets, comb

# distinct valid sequences per (n, k); k=2 is the tournament score count 1,1,1,2,4,9,22,59
VALID_COUNTS = {
    2: [1, 1, 1, 2, 4, 9, 22, 59],
    3: [1, 1, 1, 1, 4, 21, 179, 2039],
    4: [1, 1, 1, 1, 1, 6, 95, 3061],
}


def seqs(n, k, *rows):
    return {LosingScoreSequence(n, k, row) for row in rows}


@pytest.mark.parametrize("n, k, count", [(3, 2, 8), (4, 3, 81), (5, 3, 59049), (2, 3, 1), (0, 2, 1)])
def test_assignment_counts(n, k, count):
    assert assignment_count(n, k) == count
    if count < 1000:
        items = list(enumerate_assignments(n, k))
        assert len(items) == count
        assert len(set(items)) == count


def test_budget():
    with pytest.raises(BudgetExceededError):
        next(enumerate_assignments(8, 3, budget=1000))
    with pytest.raises(BudgetExceededError):
        achievable_losing_multisets(6, 4)


def test_small_sets():
    assert achievable_losing_multisets(3, 2) == seqs(3, 2, (0, 1, 2), (1, 1, 1))
    assert achievable_losing_multisets(2, 2) == seqs(2, 2, (0, 1))
    assert enumerate_valid(3, 2) == seqs(3, 2, (0, 1, 2), (1, 1, 1))
    assert enumerate_valid(2, 3) == seqs(2, 3, (0, 0))
    assert enumerate_valid(4, 3) == seqs(4, 3, (0, 0, 1, 3), (0, 0, 2, 2), (0, 1, 1, 2), (1, 1, 1, 1))
    assert enumerate_valid(0, 2) == seqs(0, 2, ())


@pytest.mark.parametrize("k", sorted(VALID_COUNTS))
def test_valid_counts(k):
    assert [len(enumerate_valid(n, k)) for n in range(8)] == VALID_COUNTS[k]


@pytest.mark.parametrize("n, k", [(n, 2) for n in range(7)] + [(n, 3) for n in range(6)] + [(n, 4) for n in range(6)])
def test_characterization_brute(n, k):
    got = achievable_losing_multisets(n, k)
    assert got == achievable_losing_multisets(n, k, method="dp")
    assert {r.values for r in got} == brute_losing_multisets(n, k)
    assert got == enumerate_valid(n, k)


@pytest.mark.parametrize("n, k", [(6, 4), (7, 2), (7, 3), (7, 4)])
def test_characterization_dp(n, k):
    assert achievable_losing_multisets(n, k, method="dp") == enumerate_valid(n, k)


def test_valid_sequences_pass_verify():
    for k in (2, 3, 4):
        for n in range(8):
            assert all(verify_losing(r).valid for r in enumerate_valid(n, k))


def test_brute_over_assignments_object_stream():
    got = {LosingScoreSequence.of(a.loss_vector(), 3) for a in enumerate_assignments(4, 3)}
    assert got == enumerate_valid(4, 3)


def test_sample_is_deterministic():
    assert sample(4, 3, 7) == sample(4, 3, 7)
    assert sample(6, 3, 1) != sample(6, 3, 2)


@pytest.mark.parametrize("seed", range(20))
def test_random_hypertournaments_are_valid(seed):
    rng = random.Random(seed)
    n, k = rng.randint(0, 8), rng.randint(2, 4)
    h = random_hypertournament(n, k, rng, shuffle=bool(seed % 2))
    assert len(to_loser_assignment(h).losers) == comb(n, k)
    assert verify_losing(losing_scores(h)).valid
