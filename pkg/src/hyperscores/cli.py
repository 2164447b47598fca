"""Command-line front end.

Exit codes: 0 valid/success, 1 invalid sequence or oracle mismatch,
2 malformed input, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from collections.abc import Sequence

from .core import (
    Arc,
    Hypertournament,
    HypertournamentError,
    InvariantError,
    LosingScoreSequence,
    ScoreSequence,
    hypertournament_from_json,
    hypertournament_from_text,
)
from .oracle import DEFAULT_BUDGET, BudgetExceededError, achievable_losing_multisets, enumerate_valid, sample
from .realize import exchange_repair, proof_realize, realize
from .verify import WrongKError, verify_landau, verify_losing, verify_score

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_sequence(tokens: Sequence[str]) -> list[int]:
    text = " ".join(tokens)
    parts = [p for p in re.split(r"[,\s]+", text) if p]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise UsageError(f"cannot parse {text!r} as a list of integers") from None


def _dump(h: Hypertournament, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(h.to_json()) + "\n"
    return h.to_text()


def _shuffle_non_losers(h: Hypertournament, seed: int) -> Hypertournament:
    rng = random.Random(seed)
    arcs = []
    for a in h.arcs:
        rest = list(a.vertices[:-1])
        rng.shuffle(rest)
        arcs.append(Arc((*rest, a.loser)))
    return Hypertournament(h.n, h.k, tuple(arcs))


def cmd_verify(args: argparse.Namespace) -> int:
    values = parse_sequence(args.sequence)
    n = len(values)
    if args.mode == "losing":
        verdict = verify_losing(LosingScoreSequence(n, args.k, tuple(values)))
    elif args.mode == "score":
        verdict = verify_score(ScoreSequence(n, args.k, tuple(values)))
    else:
        verdict = verify_landau(ScoreSequence(n, args.k, tuple(values)))
    if args.json:
        print(json.dumps(verdict.to_json()))
    elif verdict.valid:
        print("VALID")
    else:
        print(f"INVALID: {verdict.violation}")
    return EXIT_OK if verdict.valid else EXIT_INVALID


def cmd_realize(args: argparse.Namespace) -> int:
    values = parse_sequence(args.sequence)
    r = LosingScoreSequence(len(values), args.k, tuple(values))
    verdict = verify_losing(r)
    if not verdict.valid:
        print(f"INVALID: {verdict.violation}")
        return EXIT_INVALID
    h = proof_realize(r) if args.method == "proof" else realize(r)
    if args.seed is not None:
        h = _shuffle_non_losers(h, args.seed)
    sys.stdout.write(_dump(h, args.format))
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    valid = enumerate_valid(args.n, args.k)
    if not args.compare:
        for seq in sorted(valid):
            print(" ".join(map(str, seq.values)))
        return EXIT_OK
    achieved = achievable_losing_multisets(args.n, args.k, budget=args.budget, method=args.method)
    match = valid == achieved
    rel = "=" if len(valid) == len(achieved) else "!="
    print(f"{len(valid)} {rel} {len(achieved)} {'MATCH' if match else 'MISMATCH'}")
    return EXIT_OK if match else EXIT_INVALID


def cmd_sample(args: argparse.Namespace) -> int:
    if args.n < 0 or args.k < 2:
        raise UsageError("sample needs n >= 0 and k >= 2")
    sys.stdout.write(_dump(sample(args.n, args.k, args.seed), args.format))
    return EXIT_OK


def _read_hypertournament(args: argparse.Namespace) -> Hypertournament:
    text = args.input.read()
    if text.lstrip().startswith("{"):
        return hypertournament_from_json(text)
    if args.n is None or args.k is None:
        raise UsageError("--n and --k are required for the arc-per-line format")
    return hypertournament_from_text(text, args.n, args.k)


def cmd_recount(args: argparse.Namespace) -> int:
    h = _read_hypertournament(args)
    r = h.loss_vector() if args.per_vertex else sorted(h.loss_vector())
    print(",".join(map(str, r)))
    return EXIT_OK


def cmd_exchange(args: argparse.Namespace) -> int:
    h = _read_hypertournament(args)
    plan = exchange_repair(h, args.x, args.y)
    print(json.dumps(plan.to_json()))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperscores",
        description="Losing score sequences of k-hypertournaments: verify, realize, enumerate.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="test a sequence against the prefix-sum condition")
    p.add_argument("--k", type=int, default=2, help="arc size (default 2)")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--losing", dest="losing", nargs="+", metavar="SEQ")
    mode.add_argument("--score", dest="score", nargs="+", metavar="SEQ")
    mode.add_argument("--landau", dest="landau", nargs="+", metavar="SEQ", help="tournament scores (k must be 2)")
    p.add_argument("--json", action="store_true", help="print the verdict as JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("realize", help="build a hypertournament with the given losing scores")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--losing", dest="sequence", nargs="+", required=True, metavar="SEQ")
    p.add_argument("--format", choices=["arcs", "json"], default="arcs")
    p.add_argument("--seed", type=int, default=None, help="shuffle the non-losing positions of each arc")
    p.add_argument("--method", choices=["flow", "proof"], default="flow")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("oracle", help="list valid sequences or compare them with brute force")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--compare", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--method", choices=["brute", "dp"], default="brute")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sample", help="random hypertournament with a uniform loser per subset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["arcs", "json"], default="arcs")
    p.set_defaults(func=cmd_sample)

    for name, func, helptext in (
        ("recount", cmd_recount, "losing scores of a hypertournament read from a file or stdin"),
        ("exchange", cmd_exchange, "plan moving one loss from --x to --y"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input", nargs="?", type=argparse.FileType("r"), default=sys.stdin)
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)
        if name == "recount":
            p.add_argument("--per-vertex", action="store_true", help="report scores by vertex, unsorted")
        else:
            p.add_argument("--x", type=int, required=True, help="donor vertex")
            p.add_argument("--y", type=int, required=True, help="receiver vertex")
        p.set_defaults(func=func)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        args.mode = next(m for m in ("losing", "score", "landau") if getattr(args, m) is not None)
        args.sequence = getattr(args, args.mode)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, InvariantError, WrongKError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except HypertournamentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
