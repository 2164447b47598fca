"""Witness construction for valid losing score sequences.

:func:`realize` solves the loser assignment as a bipartite b-matching
(every k-subset picks one loser, vertex ``i`` must be picked ``r_i`` times)
with augmenting paths. :func:`split_realize` and :func:`exchange_repair`
carry out the two constructions used in the inductive existence argument,
and :func:`proof_realize` chains them into a complete recursive builder.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal

from .core import (
    Arc,
    Hypertournament,
    HypertournamentError,
    LosingScoreSequence,
    Subset,
    binom,
    canonical_arc,
    k_subsets,
)
from .verify import Verdict, verify_losing


class InfeasibleSequenceError(HypertournamentError):
    def __init__(self, message: str, verdict: Verdict | None = None):
        super().__init__(message)
        self.verdict = verdict


class PreconditionError(HypertournamentError):
    pass


class VertexNotInArcError(HypertournamentError):
    pass


class ArcNotPresentError(HypertournamentError):
    pass


class NoExchangeFoundError(HypertournamentError):
    pass


class NoValidDistributionError(HypertournamentError):
    pass


def arc_swap(e: Arc, a: int, b: int) -> Arc:
    """Interchange the positions of ``a`` and ``b`` inside ``e``."""
    if a not in e or b not in e:
        missing = a if a not in e else b
        raise VertexNotInArcError(f"vertex {missing} does not occur in arc {e.vertices}")
    verts = list(e.vertices)
    i, j = verts.index(a), verts.index(b)
    verts[i], verts[j] = verts[j], verts[i]
    return Arc(tuple(verts))


# ---------------------------------------------------------------------------
# loser assignment by augmenting paths

def assign_losers(
    subsets: Sequence[Subset],
    targets: dict[int, int] | Sequence[int],
    candidates: Callable[[Subset], Sequence[int]] | None = None,
) -> dict[Subset, int] | None:
    """Pick a loser for each subset so vertex ``v`` is picked ``targets[v]`` times at most.

    Subsets are processed in the given order and each search prefers
    candidates by ascending vertex id, so the result is deterministic.
    Returns ``None`` when some subset cannot be placed, which by König's
    argument means no complete assignment exists.
    """
    if candidates is None:
        candidates = lambda s: s  # noqa: E731
    cap = targets.__getitem__
    load: dict[int, int] = {}
    held: dict[int, list[Subset]] = {}
    owner: dict[Subset, int] = {}

    for s in subsets:
        parent: dict[int, tuple[Subset, int | None]] = {}
        queue: deque[int] = deque()
        for v in sorted(candidates(s)):
            if v not in parent:
                parent[v] = (s, None)
                queue.append(v)
        found = None
        while queue:
            v = queue.popleft()
            if load.get(v, 0) < cap(v):
                found = v
                break
            for t in held.get(v, ()):
                for w in sorted(candidates(t)):
                    if w not in parent:
                        parent[w] = (t, v)
                        queue.append(w)
        if found is None:
            return None
        load[found] = load.get(found, 0) + 1
        v = found
        while True:
            t, prev = parent[v]
            owner[t] = v
            held.setdefault(v, []).append(t)
            if prev is None:
                break
            held[prev].remove(t)
            v = prev
    return owner


def _require_valid(r: LosingScoreSequence) -> None:
    verdict = verify_losing(r)
    if not verdict.valid:
        raise InfeasibleSequenceError(
            f"{list(r.values)} is not a losing score sequence for k={r.k}: {verdict.violation}",
            verdict,
        )


def _check_witness(h: Hypertournament, targets: Sequence[int]) -> Hypertournament:
    got = h.loss_vector()
    if got != list(targets):
        raise InfeasibleSequenceError(f"construction produced losing scores {got}, expected {list(targets)}")
    return h


def realize(r: LosingScoreSequence) -> Hypertournament:
    """A hypertournament in which vertex ``i`` has losing score ``r.values[i]``.

    Arcs are listed in lexicographic subset order, each with its loser last
    and the remaining vertices ascending.
    """
    _require_valid(r)
    subsets = k_subsets(r.n, r.k)
    owner = assign_losers(subsets, r.values)
    if owner is None:
        raise InfeasibleSequenceError(f"no loser assignment realizes {list(r.values)}")
    h = Hypertournament(r.n, r.k, tuple(canonical_arc(s, owner[s]) for s in subsets))
    return _check_witness(h, r.values)


# ---------------------------------------------------------------------------
# equality split

@dataclass(frozen=True)
class SplitPoint:
    """A prefix length ``j`` at which the prefix condition is tight.

    ``cross_total`` counts the arcs meeting both the first ``j`` vertices and
    the remaining ``m = n - j``; ``alpha`` is their equal share per vertex of
    the second part.
    """

    n: int
    k: int
    j: int
    m: int
    cross_total: int
    alpha_num: int
    alpha_den: int

    @classmethod
    def at(cls, n: int, k: int, j: int) -> SplitPoint:
        if not 1 <= j < n:
            raise PreconditionError(f"split index must satisfy 1 <= j < n, got j={j}, n={n}")
        m = n - j
        cross = sum(binom(j, i) * binom(m, k - i) for i in range(1, k))
        alpha = Fraction(cross, m)
        sp = cls(n, k, j, m, cross, alpha.numerator, alpha.denominator)
        if cross != binom(n, k) - binom(j, k) - binom(m, k):
            raise AssertionError("cross arc count disagrees with Vandermonde's identity")
        return sp

    @property
    def alpha(self) -> Fraction:
        return Fraction(self.alpha_num, self.alpha_den)


def split_points(r: LosingScoreSequence) -> list[SplitPoint]:
    """Every ``j < n`` where ``r_1 + ... + r_j == C(j, k)``, ascending."""
    out = []
    total = 0
    for j, v in enumerate(r.values[:-1], start=1):
        total += v
        if total == binom(j, r.k):
            out.append(SplitPoint.at(r.n, r.k, j))
    return out


def _check_split(r: LosingScoreSequence, sp: SplitPoint) -> None:
    if (sp.n, sp.k) != (r.n, r.k):
        raise PreconditionError(f"split point is for n={sp.n}, k={sp.k}; sequence has n={r.n}, k={r.k}")
    _require_valid(r)
    prefix = sum(r.values[: sp.j])
    if prefix != binom(sp.j, r.k):
        raise PreconditionError(
            f"prefix sum {prefix} at j={sp.j} is not tight (C({sp.j},{r.k}) = {binom(sp.j, r.k)})"
        )


def _cross_subsets(n: int, k: int, j: int) -> list[Subset]:
    return [s for s in k_subsets(n, k) if s[0] < j <= s[-1]]


def _tail_candidates(j: int) -> Callable[[Subset], Sequence[int]]:
    return lambda s: [v for v in s if v >= j]


def cross_distribution(r: LosingScoreSequence, sp: SplitPoint) -> tuple[int, ...]:
    """Cross-arc losses ``c_1..c_m`` for the vertices after the split.

    Equal shares are used when they work: every vertex gets ``floor(alpha)``
    and the ``cross_total mod m`` vertices with the largest losing scores get
    one more. When that leaves an invalid residual or an unplaceable cross
    part, the distribution is read off an exact assignment of every arc
    meeting the second part.
    """
    _check_split(r, sp)
    n, k, j, m = r.n, r.k, sp.j, sp.m
    tail = r.values[j:]
    cross = _cross_subsets(n, k, j)
    cand = _tail_candidates(j)

    q, extra = divmod(sp.cross_total, m)
    shares = tuple(q + (1 if i >= m - extra else 0) for i in range(m))
    residual = [t - c for t, c in zip(tail, shares)]
    if min(residual, default=0) >= 0 and verify_losing(LosingScoreSequence.of(residual, k)).valid:
        placed = assign_losers(cross, {j + i: c for i, c in enumerate(shares)}, cand)
        if placed is not None:
            return shares

    outside = [s for s in k_subsets(n, k) if s[-1] >= j]
    owner = assign_losers(outside, {j + i: t for i, t in enumerate(tail)}, cand)
    if owner is None:
        raise NoValidDistributionError(f"no cross-loss distribution exists for {list(r.values)} at j={j}")
    counts = [0] * m
    for s in cross:
        counts[owner[s] - j] += 1
    return tuple(counts)


def _relabel(h: Hypertournament, labels: Sequence[int]) -> list[Arc]:
    return [Arc(tuple(labels[v] for v in a.vertices)) for a in h.arcs]


def _build_on(targets: Sequence[int], k: int, labels: Sequence[int]) -> list[Arc]:
    """Recursively realize per-vertex ``targets`` and map vertex ``i`` to ``labels[i]``."""
    order = sorted(range(len(targets)), key=lambda i: (targets[i], i))
    seq = LosingScoreSequence(len(targets), k, tuple(targets[i] for i in order))
    h = proof_realize(seq)
    return _relabel(h, [labels[i] for i in order])


def split_realize(r: LosingScoreSequence, sp: SplitPoint) -> Hypertournament:
    """Glue a realization of the tight prefix to one of the adjusted suffix.

    Every arc meeting both parts loses to a suffix vertex; suffix vertex
    ``j + i`` takes ``c_i`` of those losses (see :func:`cross_distribution`)
    and the rest of its target from arcs inside the suffix.
    """
    _check_split(r, sp)
    n, k, j = r.n, r.k, sp.j
    c = cross_distribution(r, sp)
    residual = [r.values[j + i] - ci for i, ci in enumerate(c)]

    arcs = _build_on(r.values[:j], k, range(j))
    arcs += _build_on(residual, k, range(j, n))
    cross = _cross_subsets(n, k, j)
    owner = assign_losers(cross, {j + i: ci for i, ci in enumerate(c)}, _tail_candidates(j))
    if owner is None:
        raise NoValidDistributionError(f"cross losses {c} cannot be placed for {list(r.values)}")
    arcs += [canonical_arc(s, owner[s]) for s in cross]
    arcs.sort(key=lambda a: a.support)
    return _check_witness(Hypertournament(n, k, tuple(arcs)), r.values)


# ---------------------------------------------------------------------------
# arc exchanges

@dataclass(frozen=True)
class ExchangePlan:
    """Arcs to swap out of a hypertournament and their reoriented replacements.

    ``removed[i]`` and ``added[i]`` always span the same k-subset.
    """

    kind: Literal["single", "double"]
    removed: tuple[Arc, ...]
    added: tuple[Arc, ...]
    donor: int
    receiver: int

    def __post_init__(self) -> None:
        if len(self.removed) != len(self.added):
            raise ValueError("a plan must add exactly as many arcs as it removes")
        for old, new in zip(self.removed, self.added):
            if old.support != new.support:
                raise ValueError(f"replacement {new.vertices} does not span {old.support}")

    def to_json(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "removed": [list(a.vertices) for a in self.removed],
            "added": [list(a.vertices) for a in self.added],
            "donor": self.donor,
            "receiver": self.receiver,
        }


def exchange_repair(h: Hypertournament, x: int, y: int) -> ExchangePlan:
    """Plan that moves one loss from ``x`` to ``y``.

    If some arc holds both vertices with ``x`` last, swapping them is enough.
    Otherwise pick a (k-1)-set W avoiding both such that ``W + x`` loses to
    ``x`` while ``W + y`` loses to some ``w`` in W: moving ``y`` to the end
    of the second arc and ``w`` to the end of the first keeps ``w`` even.
    """
    r = h.loss_vector()
    for v in (x, y):
        if not 0 <= v < h.n:
            raise PreconditionError(f"vertex {v} outside range(0, {h.n})")
    if r[x] <= r[y]:
        raise PreconditionError(f"donor {x} has losing score {r[x]}, not above receiver {y} ({r[y]})")

    for e in h.arcs:
        if e.loser == x and y in e:
            return ExchangePlan("single", (e,), (arc_swap(e, x, y),), x, y)

    by_support = {a.support: a for a in h.arcs}
    for e2 in h.arcs:
        if e2.loser != x or y in e2:
            continue
        rest = [v for v in e2.vertices if v != x]
        e1 = by_support[tuple(sorted((*rest, y)))]
        if e1.loser == y:
            continue
        w = e1.loser
        return ExchangePlan("double", (e1, e2), (arc_swap(e1, y, w), arc_swap(e2, w, x)), x, y)

    raise NoExchangeFoundError(f"no arc exchange moves a loss from {x} to {y}")


def apply_plan(h: Hypertournament, p: ExchangePlan) -> Hypertournament:
    """Replace each removed arc by its counterpart, keeping arc order."""
    arcs = list(h.arcs)
    index = {a: i for i, a in enumerate(arcs)}
    for old, new in zip(p.removed, p.added):
        i = index.pop(old, None)
        if i is None:
            raise ArcNotPresentError(f"arc {old.vertices} is not in the hypertournament")
        arcs[i] = new
    return Hypertournament(h.n, h.k, tuple(arcs))


# ---------------------------------------------------------------------------
# the full inductive construction

def proof_realize(r: LosingScoreSequence) -> Hypertournament:
    """Realize ``r`` using only splits and arc exchanges.

    While no prefix ``j < n`` is tight, lower ``r_1`` and raise ``r_n`` by
    one; this keeps the sequence valid and must eventually create a tight
    prefix (``r_1 = 0`` is tight at ``j = 1``). Split there, then undo each
    shift with an exchange from vertex ``n-1`` to vertex ``0``.
    """
    _require_valid(r)
    n, k = r.n, r.k
    if n < k:
        return Hypertournament(n, k, ())

    cur = list(r.values)
    shifts = 0
    while True:
        seq = LosingScoreSequence(n, k, tuple(cur))
        splits = split_points(seq)
        if splits:
            break
        cur[0] -= 1
        cur[-1] += 1
        shifts += 1

    h = split_realize(seq, splits[0])
    for _ in range(shifts):
        h = apply_plan(h, exchange_repair(h, n - 1, 0))
    return _check_witness(h, r.values)
