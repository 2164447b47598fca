"""Losing score sequences of k-hypertournaments.

Verification of the prefix-sum characterization, witness construction,
arc-exchange operations and exhaustive small-case oracles.
"""

from .core import (
    Arc,
    EntryOutOfRangeError,
    Hypertournament,
    HypertournamentError,
    InvariantError,
    LoserAssignment,
    LosingScoreSequence,
    MalformedHypertournamentError,
    ScoreSequence,
    binom,
    from_loser_assignment,
    losing_scores,
    scores,
    to_loser_assignment,
)
from .oracle import (
    BudgetExceededError,
    achievable_losing_multisets,
    enumerate_assignments,
    enumerate_valid,
    random_hypertournament,
    sample,
)
from .realize import (
    ExchangePlan,
    SplitPoint,
    apply_plan,
    arc_swap,
    cross_distribution,
    exchange_repair,
    proof_realize,
    realize,
    split_points,
    split_realize,
)
from .verify import Verdict, Violation, verify_landau, verify_losing, verify_score

__version__ = "0.1.0"
