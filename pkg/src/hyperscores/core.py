"""Domain types for k-hypertournaments and their (losing) score sequences.

Vertices are the integers ``0..n-1``. An arc is an ordered k-tuple of
distinct vertices and its last entry is the loser of that arc. A
hypertournament holds exactly one arc per k-subset of the vertex set, or no
arcs at all when ``n < k``.
"""

from __future__ import annotations

import json
import math
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations
from types import MappingProxyType
from typing import Any

Subset = tuple[int, ...]


class HypertournamentError(ValueError):
    """Base class for every error raised by this package."""


class InvariantError(HypertournamentError):
    """A value violates the invariants of its type."""


class EntryOutOfRangeError(InvariantError):
    """A score exceeds the number of arcs a single vertex belongs to."""


class MalformedHypertournamentError(InvariantError):
    """The arc set does not cover every k-subset exactly once."""


def binom(p: int, q: int) -> int:
    """Binomial coefficient with ``binom(p, q) == 0`` whenever ``p < q``.

    Arithmetic is exact; Python integers never overflow, so large arguments
    simply produce large results.
    """
    if p < 0 or q < 0:
        raise ValueError(f"binom requires non-negative arguments, got ({p}, {q})")
    if p < q:
        return 0
    return math.comb(p, q)


def arcs_per_vertex(n: int, k: int) -> int:
    """Number of arcs containing a fixed vertex, ``C(n-1, k-1)`` (0 when n == 0)."""
    if n == 0:
        return 0
    return binom(n - 1, k - 1)


def k_subsets(n: int, k: int) -> list[Subset]:
    """All k-subsets of ``range(n)`` as ascending tuples, in lexicographic order."""
    return list(combinations(range(n), k))


def _check_nk(n: int, k: int) -> None:
    if n < 0:
        raise InvariantError(f"n must be non-negative, got {n}")
    if k < 2:
        raise InvariantError(f"k must be at least 2, got {k}")


def _check_values(values: tuple[int, ...], n: int, what: str) -> None:
    if len(values) != n:
        raise InvariantError(f"{what} has {len(values)} entries but n = {n}")
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise InvariantError(f"{what} entries must be integers, got {v!r}")
        if v < 0:
            raise InvariantError(f"{what} entries must be non-negative, got {v}")
    for a, b in zip(values, values[1:]):
        if a > b:
            raise InvariantError(f"{what} must be non-decreasing: {list(values)}")


@dataclass(frozen=True, order=True)
class LosingScoreSequence:
    """A non-decreasing sequence of losing scores ``r_1 <= ... <= r_n``.

    The constructor validates and never reorders; use :meth:`of` to sort
    arbitrary input first.
    """

    n: int
    k: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        _check_nk(self.n, self.k)
        _check_values(self.values, self.n, "losing score sequence")

    @classmethod
    def of(cls, values: Iterable[int], k: int) -> LosingScoreSequence:
        vals = tuple(sorted(values))
        return cls(len(vals), k, vals)

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.values)

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "k": self.k, "values": list(self.values)}


@dataclass(frozen=True, order=True)
class ScoreSequence:
    """A non-decreasing sequence of scores, each at most ``C(n-1, k-1)``."""

    n: int
    k: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        _check_nk(self.n, self.k)
        _check_values(self.values, self.n, "score sequence")
        cap = arcs_per_vertex(self.n, self.k)
        for v in self.values:
            if v > cap:
                raise EntryOutOfRangeError(
                    f"score {v} exceeds C({self.n - 1},{self.k - 1}) = {cap}"
                )

    @classmethod
    def of(cls, values: Iterable[int], k: int) -> ScoreSequence:
        vals = tuple(sorted(values))
        return cls(len(vals), k, vals)

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.values)

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "k": self.k, "values": list(self.values)}


@dataclass(frozen=True)
class Arc:
    """Ordered tuple of distinct vertices; the last vertex loses."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) < 2:
            raise InvariantError(f"an arc needs at least two vertices: {self.vertices}")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvariantError(f"arc has repeated vertices: {self.vertices}")

    @property
    def loser(self) -> int:
        return self.vertices[-1]

    @property
    def support(self) -> Subset:
        """The underlying k-subset, ascending."""
        return tuple(sorted(self.vertices))

    def __contains__(self, v: object) -> bool:
        return v in self.vertices

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return " ".join(map(str, self.vertices))


def _as_arc(a: Arc | Sequence[int]) -> Arc:
    return a if isinstance(a, Arc) else Arc(tuple(a))


@dataclass(frozen=True)
class Hypertournament:
    n: int
    k: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(_as_arc(a) for a in self.arcs))
        _check_nk(self.n, self.k)
        if self.n < self.k:
            if self.arcs:
                raise MalformedHypertournamentError(
                    f"n={self.n} < k={self.k} admits no arcs, got {len(self.arcs)}"
                )
            return
        seen: set[Subset] = set()
        for arc in self.arcs:
            if len(arc) != self.k:
                raise MalformedHypertournamentError(f"arc {arc.vertices} does not have k={self.k} vertices")
            if min(arc.vertices) < 0 or max(arc.vertices) >= self.n:
                raise MalformedHypertournamentError(f"arc {arc.vertices} leaves range(0, {self.n})")
            s = arc.support
            if s in seen:
                raise MalformedHypertournamentError(f"subset {s} carries more than one arc")
            seen.add(s)
        expected = binom(self.n, self.k)
        if len(seen) != expected:
            raise MalformedHypertournamentError(
                f"{len(seen)} arcs present but C({self.n},{self.k}) = {expected} required"
            )

    def loss_vector(self) -> list[int]:
        """Losing score of each vertex, indexed by vertex."""
        r = [0] * self.n
        for arc in self.arcs:
            r[arc.loser] += 1
        return r

    def score_vector(self) -> list[int]:
        """Score of each vertex, indexed by vertex."""
        s = [0] * self.n
        for arc in self.arcs:
            for v in arc.vertices[:-1]:
                s[v] += 1
        return s

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "k": self.k, "arcs": [list(a.vertices) for a in self.arcs]}

    def to_text(self) -> str:
        """One arc per line, vertices space separated, loser last."""
        return "".join(f"{a}\n" for a in self.arcs)


@dataclass(frozen=True)
class LoserAssignment:
    """Designated loser for every k-subset; keys are ascending tuples."""

    n: int
    k: int
    losers: Mapping[Subset, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        _check_nk(self.n, self.k)
        normalized = {tuple(sorted(s)): v for s, v in self.losers.items()}
        if len(normalized) != len(self.losers):
            raise InvariantError("loser map lists the same subset twice")
        domain = k_subsets(self.n, self.k)
        missing = [s for s in domain if s not in normalized]
        if missing:
            raise InvariantError(f"loser map is missing subset {missing[0]}")
        if len(normalized) != len(domain):
            extra = next(s for s in normalized if s not in set(domain))
            raise InvariantError(f"loser map has a subset outside the domain: {extra}")
        for s, v in normalized.items():
            if v not in s:
                raise InvariantError(f"loser {v} is not a member of subset {s}")
        object.__setattr__(self, "losers", MappingProxyType(normalized))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LoserAssignment):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and dict(self.losers) == dict(other.losers)

    def __hash__(self) -> int:
        return hash((self.n, self.k, tuple(sorted(self.losers.items()))))

    def loss_vector(self) -> list[int]:
        r = [0] * self.n
        for v in self.losers.values():
            r[v] += 1
        return r


def canonical_arc(subset: Iterable[int], loser: int) -> Arc:
    """The arc on ``subset`` with ``loser`` last and the others ascending."""
    rest = sorted(v for v in subset if v != loser)
    return Arc((*rest, loser))


def losing_scores(h: Hypertournament) -> LosingScoreSequence:
    return LosingScoreSequence.of(h.loss_vector(), h.k)


def scores(h: Hypertournament) -> ScoreSequence:
    return ScoreSequence.of(h.score_vector(), h.k)


def to_loser_assignment(h: Hypertournament) -> LoserAssignment:
    return LoserAssignment(h.n, h.k, {a.support: a.loser for a in h.arcs})


def from_loser_assignment(a: LoserAssignment) -> Hypertournament:
    """Build the canonical hypertournament for ``a``; arcs follow subset order."""
    arcs = [canonical_arc(s, a.losers[s]) for s in k_subsets(a.n, a.k)]
    return Hypertournament(a.n, a.k, tuple(arcs))


def complement_scores(values: Sequence[int], n: int, k: int) -> tuple[int, ...]:
    """Map a sorted score (or losing score) sequence to its sorted dual.

    Each vertex lies in ``C(n-1, k-1)`` arcs and is either last or not in
    each of them, so ``r_i = C(n-1, k-1) - s_{n+1-i}``.
    """
    cap = arcs_per_vertex(n, k)
    return tuple(cap - v for v in reversed(values))


# JSON encodings shared with the command-line front end.

def sequence_from_json(obj: Mapping[str, Any] | str, kind: str = "losing"):
    if isinstance(obj, str):
        obj = json.loads(obj)
    cls = {"losing": LosingScoreSequence, "score": ScoreSequence}[kind]
    seq = cls(int(obj["n"]), int(obj["k"]), tuple(obj["values"]))
    return seq


def hypertournament_from_json(obj: Mapping[str, Any] | str) -> Hypertournament:
    if isinstance(obj, str):
        obj = json.loads(obj)
    k = int(obj["k"])
    arcs = []
    for raw in obj["arcs"]:
        if len(raw) != k:
            raise MalformedHypertournamentError(f"arc {raw} does not have k={k} entries")
        arcs.append(Arc(tuple(int(v) for v in raw)))
    return Hypertournament(int(obj["n"]), k, tuple(arcs))


def hypertournament_from_text(text: str, n: int, k: int) -> Hypertournament:
    """Parse the one-arc-per-line format produced by :meth:`Hypertournament.to_text`."""
    arcs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        arcs.append(Arc(tuple(int(tok) for tok in line.split())))
    return Hypertournament(n, k, tuple(arcs))
