"""Prefix-sum tests for losing score, score and tournament score sequences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Literal

from .core import (
    EntryOutOfRangeError,
    HypertournamentError,
    LosingScoreSequence,
    ScoreSequence,
    arcs_per_vertex,
    binom,
    complement_scores,
)

ViolationKind = Literal["strict-deficit", "total-mismatch"]


class WrongKError(HypertournamentError):
    pass


@dataclass(frozen=True)
class Violation:
    """First prefix where the prefix-sum condition fails.

    ``kind`` is ``"strict-deficit"`` for a prefix ``j < n`` whose sum falls
    below ``C(j, k)`` and ``"total-mismatch"`` when the full sum differs from
    ``C(n, k)``.
    """

    j: int
    prefix_sum: int
    bound: int
    kind: ViolationKind

    def to_json(self) -> dict[str, Any]:
        return {"j": self.j, "prefix_sum": self.prefix_sum, "bound": self.bound, "kind": self.kind}

    def __str__(self) -> str:
        rel = "<" if self.kind == "strict-deficit" else "!="
        return f"j={self.j} prefix_sum={self.prefix_sum} {rel} bound={self.bound} ({self.kind})"


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violation: Violation | None = None

    def __post_init__(self) -> None:
        if self.valid != (self.violation is None):
            raise ValueError("a verdict is valid exactly when it carries no violation")

    def __bool__(self) -> bool:
        return self.valid

    def to_json(self) -> dict[str, Any]:
        return {
            "valid": self.valid,
            "violation": None if self.violation is None else self.violation.to_json(),
        }


VALID = Verdict(True)


def _prefix_check(values, bound) -> Verdict:
    n = len(values)
    total = 0
    for j, v in enumerate(values, start=1):
        total += v
        b = bound(j)
        if j < n and total < b:
            return Verdict(False, Violation(j, total, b, "strict-deficit"))
    b = bound(n)
    if total != b:
        return Verdict(False, Violation(n, total, b, "total-mismatch"))
    return VALID


def verify_losing(r: LosingScoreSequence) -> Verdict:
    """Check ``r_1 + ... + r_j >= C(j, k)`` for every j, with equality at j = n.

    For ``n < k`` every bound is zero, so only the all-zero sequence (the
    arcless hypertournament) passes; ``n = 0`` passes vacuously.
    """
    k = r.k
    return _prefix_check(r.values, lambda j: binom(j, k))


def losing_from_scores(s: ScoreSequence) -> LosingScoreSequence:
    cap = arcs_per_vertex(s.n, s.k)
    bad = [v for v in s.values if v > cap]
    if bad:
        raise EntryOutOfRangeError(f"score {bad[0]} exceeds C({s.n - 1},{s.k - 1}) = {cap}")
    return LosingScoreSequence(s.n, s.k, complement_scores(s.values, s.n, s.k))


def scores_from_losing(r: LosingScoreSequence) -> ScoreSequence:
    return ScoreSequence(r.n, r.k, complement_scores(r.values, r.n, r.k))


def verify_score(s: ScoreSequence) -> Verdict:
    """Validate a score sequence through its complementary losing sequence.

    A reported violation refers to prefixes of the complemented sequence.
    """
    return verify_losing(losing_from_scores(s))


def verify_landau(s: ScoreSequence) -> Verdict:
    """Landau's condition for tournament score sequences.

    Kept separate from :func:`verify_score` on purpose so the two can be
    cross-checked against each other.
    """
    if s.k != 2:
        raise WrongKError(f"Landau's condition applies to tournaments (k=2), got k={s.k}")
    return _prefix_check(s.values, lambda j: j * (j - 1) // 2)
