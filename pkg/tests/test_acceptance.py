"""Exit criteria for the package, one test per criterion.

Every test prints a single ``[PASS]``/``[FAIL]`` line regardless of pytest
output capture. All comparisons are exact; there are no tolerances.
"""

import random
import subprocess
import sys
import time
from itertools import combinations

import pytest

from hyperscores.core import Hypertournament, LosingScoreSequence, ScoreSequence, losing_scores
from hyperscores.oracle import (
    DEFAULT_BUDGET,
    achievable_losing_multisets,
    assignment_count,
    enumerate_valid,
    random_hypertournament,
)
from hyperscores.realize import apply_plan, exchange_repair, proof_realize, realize
from hyperscores.verify import verify_landau, verify_losing, verify_score

from conftest import comb, nondecreasing, tournament_score_sequences

DESK_RANGE = [(n, 2) for n in range(7)] + [(n, 3) for n in range(6)] + [(n, 4) for n in range(7)]


@pytest.fixture
def report(capsys):
    def emit(criterion, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {criterion}: {detail}")
        assert ok, f"{criterion}: {detail}"

    return emit


def recount(h):
    r = [0] * h.n
    for a in h.arcs:
        r[a.vertices[-1]] += 1
    return r


def covers_once(h):
    supports = [frozenset(a.vertices) for a in h.arcs]
    if any(len(a.vertices) != h.k for a in h.arcs):
        return False
    expected = {frozenset(c) for c in combinations(range(h.n), h.k)}
    return len(supports) == len(expected) and set(supports) == expected


def test_ac1_characterization_equivalence(report):
    start = time.perf_counter()
    bad, dp_only = [], []
    for n, k in DESK_RANGE:
        valid = enumerate_valid(n, k)
        dp = achievable_losing_multisets(n, k, method="dp")
        if assignment_count(n, k) <= DEFAULT_BUDGET:
            brute = achievable_losing_multisets(n, k, method="brute")
            if brute != dp:
                bad.append((n, k, "brute != dp"))
            achieved = brute
        else:
            achieved = dp
            dp_only.append((n, k))
        if achieved != valid:
            bad.append((n, k, f"{len(valid)} valid vs {len(achieved)} achieved"))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30
    report(
        "AC1 characterization set equality",
        ok,
        f"{len(DESK_RANGE)} (n,k) cases ({dp_only} over budget, dp only), {elapsed:.1f}s, mismatches={bad}"
    )


def test_ac2_realization_soundness(report):
    start = time.perf_counter()
    checked, bad = 0, []
    for n, k in DESK_RANGE:
        for r in sorted(enumerate_valid(n, k)):
            for build in (realize, proof_realize):
                h = build(r)
                checked += 1
                if recount(h) != list(r.values) or not covers_once(h):
                    bad.append((build.__name__, r.values))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 60
    report("AC2 realization soundness", ok, f"{checked} witnesses, {elapsed:.1f}s, failures={bad[:5]}")


def test_ac3_landau_reduction(report):
    checked, bad = 0, []
    for n in range(7):
        real = tournament_score_sequences(n)
        for values in nondecreasing(n, max(n - 1, 0)):
            if sum(values) > comb(n, 2):
                continue
            s = ScoreSequence(n, 2, values)
            bits = (verify_score(s).valid, verify_landau(s).valid, values in real)
            checked += 1
            if len(set(bits)) != 1:
                bad.append((values, bits))
    report("AC3 Landau reduction", not bad, f"{checked} candidates for n<=6, disagreements={bad[:5]}")


def test_ac4_complement_duality(report):
    rng = random.Random(20240401)
    checked, bad = 0, []
    for _ in range(1000):
        n, k = rng.randint(0, 10), rng.randint(2, 4)
        r = losing_scores(random_hypertournament(n, k, rng))
        cap = comb(n - 1, k - 1) if n else 0
        # a perturbed sibling exercises the invalid side as well
        vals = list(r.values)
        if n >= 2:
            i, j = rng.sample(range(n), 2)
            if vals[i] > 0 and vals[j] < cap:
                vals[i] -= 1
                vals[j] += 1
        for cand in (r, LosingScoreSequence.of(vals, k)):
            s = ScoreSequence(n, k, tuple(cap - v for v in reversed(cand.values)))
            checked += 1
            if verify_score(s).valid != verify_losing(cand).valid:
                bad.append(cand)
        if not verify_losing(r).valid:
            bad.append(("sampled sequence rejected", r))
    report("AC4 complement duality", not bad, f"{checked} sequences from 1000 seeded draws, disagreements={bad[:5]}")


def test_ac5_exchange_delta(report):
    rng = random.Random(5)
    plans, kinds, bad = 0, {"single": 0, "double": 0}, []
    for _ in range(500):
        n = rng.randint(2, 7)
        k = rng.randint(2, min(4, n))
        h = random_hypertournament(n, k, rng, shuffle=True)
        r = recount(h)
        for x in range(n):
            for y in range(n):
                if r[x] <= r[y]:
                    continue
                try:
                    plan = exchange_repair(h, x, y)
                except Exception as exc:  # the existence claim under test
                    bad.append((n, k, x, y, repr(exc)))
                    continue
                after = apply_plan(h, plan)
                want = list(r)
                want[x] -= 1
                want[y] += 1
                plans += 1
                kinds[plan.kind] += 1
                if recount(after) != want or not covers_once(after):
                    bad.append((n, k, x, y, plan.kind))
    detail = f"{plans} plans ({kinds['single']} single, {kinds['double']} double), failures={bad[:5]}"
    report("AC5 exchange delta", not bad and kinds["double"] > 0, detail)


def test_ac6_conservation(report):
    rng = random.Random(6)
    generated: list[Hypertournament] = []
    for n, k in DESK_RANGE:
        for r in enumerate_valid(n, k):
            generated.append(realize(r))
            generated.append(proof_realize(r))
    for _ in range(500):
        n = rng.randint(0, 8)
        generated.append(random_hypertournament(n, rng.randint(2, 4), rng, shuffle=True))
    bad = []
    for h in generated:
        r = recount(h)
        s = [0] * h.n
        for a in h.arcs:
            for v in a.vertices[:-1]:
                s[v] += 1
        per_vertex = comb(h.n - 1, h.k - 1) if h.n else 0
        if sum(r) != comb(h.n, h.k) or any(a + b != per_vertex for a, b in zip(r, s)):
            bad.append(h)
    report("AC6 conservation", not bad, f"{len(generated)} hypertournaments, violations={len(bad)}")


GOLDEN = [
    (["verify", "--k", "3", "--losing", "1,1,1,1"], 0, b"VALID\n"),
    (["verify", "--k", "3", "--losing", "0,0,0,4"], 1, b"INVALID: j=3 prefix_sum=0 < bound=1 (strict-deficit)\n"),
    (["verify", "--k", "3", "--losing", "1,0,1"], 2, b""),
    (["realize", "--k", "3", "--losing", "0,0,1"], 0, b"0 1 2\n"),
]


def test_ac7_cli_golden(report):
    bad = []
    for argv, code, stdout in GOLDEN:
        proc = subprocess.run([sys.executable, "-m", "hyperscores", *argv], capture_output=True)
        if (proc.returncode, proc.stdout) != (code, stdout):
            bad.append((" ".join(argv), proc.returncode, proc.stdout))
    report("AC7 CLI golden outputs", not bad, f"{len(GOLDEN)} invocations, mismatches={bad}")
