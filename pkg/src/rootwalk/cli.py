"""Command-line interface: ``rootwalk {apply,verify,table,identity,stats}``.

Exit status: 0 on success, 1 when a verification fails or an operation's
precondition is violated, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import ballot, census, rootops, series
from .ballot import Scenario, parse_ballot
from .errors import ParseError, PreconditionError, UsageError
from .walks import StepSet, format_walk, format_walk_nd, load_step_set, parse_walk, parse_walk_nd

INPUT_CAP = 63

WALK_OPS = {
    "raise": rootops.raise_walk,
    "lower": rootops.lower_walk,
    "theorem1": rootops.theorem1_forward,
    "theorem1-inv": rootops.theorem1_inverse,
    "reverse-negate": rootops.reverse_negate,
    "full-lower": rootops.full_lower,
    "andre-stripped": ballot.andre_stripped,
}
BALLOT_OPS = {
    "andre": ballot.andre,
    "andre-inv": ballot.andre_inverse,
    "reflect-first": ballot.reflect_first,
    "reflect-last": ballot.reflect_last,
    "central": ballot.central_first,
    "raise-ballot": ballot.raise_as_ugly_to_bad,
    "footnote": ballot.footnote_bijection,
    "footnote-inv": ballot.footnote_inverse,
}
ND_OPS = {"theorem2": rootops.theorem2_forward, "theorem2-inv": rootops.theorem2_inverse}
OTHER_OPS = ("reflect-k", "concat", "split", "lift:<name>")

EXTRA_CHECKS = ("corollary", "stats-equalities")


def _infer_t(text: str, t: int | None) -> int:
    if t is not None:
        return t
    kinds = [int(k or 0) for k in re.findall(r"N(\d*)", text)]
    return max(kinds) + 1 if kinds else 0


def _walk_arg(args, text: str | None, flag: str = "--walk"):
    if text is None:
        raise UsageError(f"{args.op} needs {flag}")
    w = parse_walk(text, _infer_t(text, args.t))
    if len(w) > INPUT_CAP:
        raise UsageError(f"walk longer than {INPUT_CAP} steps")
    return w


def _seq_arg(args):
    if args.seq is None:
        raise UsageError(f"{args.op} needs --seq")
    if len(args.seq) > INPUT_CAP:
        raise UsageError(f"sequence longer than {INPUT_CAP} votes")
    return parse_ballot(args.seq)


def _step_set_for(args, text: str) -> StepSet:
    if args.step_set:
        return load_step_set(args.step_set)
    width = len(text.split(".")[0]) if text else 2
    return StepSet.full(max(width, 1))


def cmd_apply(args) -> int:
    op = args.op
    if op in WALK_OPS:
        print(format_walk(WALK_OPS[op](_walk_arg(args, args.walk))))
    elif op in BALLOT_OPS:
        print(BALLOT_OPS[op](_seq_arg(args)))
    elif op in ND_OPS:
        if args.walk is None:
            raise UsageError(f"{op} needs --walk")
        w = parse_walk_nd(args.walk, _step_set_for(args, args.walk))
        print(format_walk_nd(ND_OPS[op](w)))
    elif op == "reflect-k":
        print(ballot.reflect_kth(_seq_arg(args), args.k))
    elif op.startswith("lift:"):
        result, count = ballot.lift(op.split(":", 1)[1], _seq_arg(args))
        print(f"{result} ({count} iteration{'' if count == 1 else 's'})")
    elif op == "concat":
        first = _walk_arg(args, args.walk)
        second = _walk_arg(args, args.suffix, "--suffix")
        print(format_walk(rootops.concat_with_upstep(first, second)))
    elif op == "split":
        prefix, suffix = rootops.split_at_last_up_from_zero(_walk_arg(args, args.walk))
        print(f"{format_walk(prefix)}\t{format_walk(suffix)}")
    else:
        known = ", ".join([*WALK_OPS, *BALLOT_OPS, *ND_OPS, *OTHER_OPS])
        raise UsageError(f"unknown op {op!r}; known: {known}")
    return 0


def cmd_verify(args) -> int:
    what = args.what
    if what in EXTRA_CHECKS:
        cap = census.default_cap(0)
        if args.max_len > cap:
            raise census.CapExceeded(f"max length {args.max_len} exceeds the cap {cap}")
        fn = census.corollary_report if what == "corollary" else census.stats_equalities_report
        reports = (fn(n) for n in range(args.max_len + 1))
    else:
        check = census.get_check(what)
        step_set = None
        if what.startswith("theorem2"):
            step_set = load_step_set(args.step_set) if args.step_set else StepSet.full(2)
        ctx = census.Context(args.t, step_set)
        cap = check.cap(ctx)
        if args.max_len > cap:
            raise census.CapExceeded(f"max length {args.max_len} exceeds the cap {cap}")
        reports = (
            census.verify_bijection(what, n, args.t, step_set) for n in range(args.max_len + 1)
        )
    failed = 0
    for report in reports:
        print(report.summary())
        failed += not report.ok
    return 1 if failed else 0


TABLE_DEFAULT_T = {"pascal": 0, "trinomial": 1, "positive": 0, "trinomial-positive": 1}


def cmd_table(args) -> int:
    kind = args.kind
    t = TABLE_DEFAULT_T[kind] if args.t is None else args.t
    if kind == "trinomial-positive":
        kind = "positive"
    sys.stdout.write(census.triangle(kind, args.rows, t).to_tsv())
    return 0


def _identity_reports(which: str, top: int, ts):
    if which == "eq1":
        yield series.check_eq1(top)
    elif which == "eq2":
        for t in ts:
            yield series.check_eq2(t, top)
    elif which == "eq3":
        for t in ts:
            yield series.check_eq3(t, top)
    elif which == "t2":
        yield series.check_t2_coincidence(top)
    elif which == "eq4":
        checks = [
            (f"alpha={a},beta={mu - a}", ballot.eq4_holds(a, mu - a))
            for mu in range(1, top + 1)
            for a in range(mu // 2 + 1, mu + 1)
        ]
        yield census.VerificationReport("eq4", None, len(checks), len(checks), preserved_stats=checks)
    elif which == "ballot":
        if top > census.DEFAULT_CAP_BALLOT:
            raise census.CapExceeded(f"--max {top} exceeds the cap {census.DEFAULT_CAP_BALLOT}")
        checks = []
        for mu in range(1, top + 1):
            tally: dict = {}
            for b in ballot.all_ballots(mu):
                key = (b.alpha, b.beta)
                tally.setdefault(key, {s: 0 for s in Scenario})[ballot.classify_ballot(b)] += 1
            for a in range(mu // 2 + 1, mu + 1):
                got = tally[(a, mu - a)]
                want = ballot.ballot_counts(a, mu - a)
                ok = (
                    (got[Scenario.GOOD], got[Scenario.BAD], got[Scenario.UGLY]) == (want.good, want.bad, want.ugly)
                    and sum(got.values()) == want.total
                )
                checks.append((f"alpha={a},beta={mu - a}", ok))
        yield census.VerificationReport("ballot", None, len(checks), len(checks), preserved_stats=checks)


def cmd_identity(args) -> int:
    ts = series.DEFAULT_T_VALUES if args.t is None else (args.t,)
    failed = 0
    for report in _identity_reports(args.which, args.max, ts):
        for label, ok in report.preserved_stats:
            print(f"{report.name}\t{label}\t{'OK' if ok else 'FAIL'}")
            failed += not ok
    return 1 if failed else 0


def cmd_stats(args) -> int:
    hist = census.distribution(args.stat, args.population, args.len, args.t)
    sys.stdout.write(census.distribution_tsv(hist))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootwalk",
        description="Raising/lowering bijections on lattice walks and ballot sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apply", help="apply one operation to a walk or ballot sequence")
    p.add_argument("--op", required=True)
    p.add_argument("--walk", help="walk text (U, D, N<k>; or +0- groups joined by '.')")
    p.add_argument("--suffix", help="second walk for --op concat")
    p.add_argument("--seq", help="ballot sequence over A/B")
    p.add_argument("--t", type=int, default=None, help="neutral step kinds (default: inferred)")
    p.add_argument("--k", type=int, default=2, help="visit index for reflect-k")
    p.add_argument("--step-set", help="step-set file for theorem2")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("verify", help="exhaustively verify a bijection or statistic claim")
    p.add_argument("--what", required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--t", type=int, default=0)
    p.add_argument("--step-set", help="step-set file for theorem2 (default: full {-1,0,1}^2)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print a triangle table as TSV")
    p.add_argument("--kind", required=True, choices=sorted(TABLE_DEFAULT_T))
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--t", type=int, default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("identity", help="check a counting identity index by index")
    p.add_argument("--which", required=True, choices=["eq1", "eq2", "eq3", "eq4", "ballot", "t2"])
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--t", type=int, default=None, help="single t (default: 0,1,2,3,5)")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("stats", help="print the exact distribution of a walk statistic as TSV")
    p.add_argument("--stat", required=True)
    p.add_argument("--len", type=int, required=True)
    p.add_argument("--t", type=int, default=0)
    p.add_argument(
        "--population", default="almost-recurrent", choices=sorted(census.POPULATIONS)
    )
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UsageError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
