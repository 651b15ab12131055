"""Exhaustive enumeration, exact counting, triangle tables and bijection checks.

Counts are exact Python integers throughout.  Enumeration order is
lexicographic in the step symbols ``U < D < N0 < N1 < ...`` (for walks on
Z^n: ``+ < 0 < -`` per coordinate), so every report is deterministic.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import ballot, rootops
from .ballot import Ballot, Scenario, classify_ballot
from .errors import CapExceeded, PreconditionError, UnknownMap, UnknownStat, UsageError
from .walks import DOWN, UP, Step, StepSet, Walk1D, WalkND, neutral

DEFAULT_CAPS = {0: 20, 1: 13, 2: 10}
DEFAULT_CAP_HIGH_T = 8
DEFAULT_CAP_ND = 8
DEFAULT_CAP_BALLOT = 20
DEFAULT_CAP_FOOTNOTE = 10


def default_cap(t: int = 0, step_set: StepSet | None = None) -> int:
    if step_set is not None:
        return DEFAULT_CAP_ND
    return DEFAULT_CAPS.get(t, DEFAULT_CAP_HIGH_T)


def _check_cap(length: int, cap: int) -> None:
    if length < 0:
        raise UsageError(f"negative length {length}")
    if length > cap:
        raise CapExceeded(f"length {length} exceeds the cap {cap}")


def alphabet(t: int) -> list[Step]:
    return [UP, DOWN] + [neutral(k) for k in range(t)]


def enumerate_walks(
    length: int,
    t: int = 0,
    predicate: Callable[[Walk1D], bool] | None = None,
    cap: int | None = None,
    prefix: Iterable[Step] = (),
) -> Iterator[Walk1D]:
    """Yield every walk of ``length`` over the t-alphabet exactly once.

    ``prefix`` fixes the first steps, which lets a sweep be partitioned.
    """
    _check_cap(length, default_cap(t) if cap is None else cap)
    prefix = tuple(prefix)
    for rest in itertools.product(alphabet(t), repeat=length - len(prefix)):
        w = Walk1D(prefix + rest, t)
        if predicate is None or predicate(w):
            yield w


def enumerate_walks_nd(
    length: int,
    step_set: StepSet,
    predicate: Callable[[WalkND], bool] | None = None,
    cap: int | None = None,
) -> Iterator[WalkND]:
    _check_cap(length, DEFAULT_CAP_ND if cap is None else cap)
    for steps in itertools.product(step_set.ordered(), repeat=length):
        w = WalkND(steps, step_set)
        if predicate is None or predicate(w):
            yield w


# --- exact counting -----------------------------------------------------------


def end_counts(length: int, t: int = 0, positive: bool = False) -> dict[int, int]:
    """Number of walks of ``length`` per end point, by dynamic programming."""
    row = {0: 1}
    for _ in range(length):
        nxt: dict[int, int] = {}
        for h, c in row.items():
            for d, weight in ((1, 1), (0, t), (-1, 1)):
                if weight == 0 or (positive and h + d < 0):
                    continue
                nxt[h + d] = nxt.get(h + d, 0) + c * weight
        row = nxt
    return dict(sorted(row.items()))


def count_walks(length: int, t: int = 0, positive: bool = False, end: int | None = None) -> int:
    counts = end_counts(length, t, positive)
    if end is None:
        return sum(counts.values())
    return counts.get(end, 0)


def count_walks_nd(
    length: int, step_set: StepSet, orthant: bool = False
) -> dict[tuple[int, ...], int]:
    """Walk counts on Z^n per end point; ``orthant`` keeps every coordinate >= 0."""
    row = {(0,) * step_set.n: 1}
    for _ in range(length):
        nxt: dict[tuple[int, ...], int] = {}
        for pos, c in row.items():
            for s in step_set.members:
                q = tuple(a + b for a, b in zip(pos, s))
                if orthant and min(q) < 0:
                    continue
                nxt[q] = nxt.get(q, 0) + c
        row = nxt
    return row


# --- triangle tables -------------------------------------------------------------

TABLE_KINDS = ("pascal", "trinomial", "positive")


@dataclass
class TriangleTable:
    kind: str
    t: int
    rows: list[list[int]]
    ends: list[list[int]]

    def value(self, n: int, end: int) -> int:
        try:
            return self.rows[n][self.ends[n].index(end)]
        except ValueError:
            return 0

    def row_sums(self) -> list[int]:
        return [sum(r) for r in self.rows]

    def to_tsv(self) -> str:
        lines = [f"kind={self.kind}\tt={self.t}\trows={len(self.rows)}"]
        lines.extend("\t".join(str(x) for x in r) for r in self.rows)
        return "\n".join(lines) + "\n"


def _row_ends(kind: str, n: int, t: int) -> list[int]:
    if kind == "pascal":
        return list(range(-n, n + 1, 2))
    if kind == "trinomial":
        return list(range(-n, n + 1))
    if t == 0:
        return list(range(n % 2, n + 1, 2))
    return list(range(0, n + 1))


def _recurrence_rows(rows: int, t: int, positive: bool) -> list[dict[int, int]]:
    out = [{0: 1}]
    for _ in range(rows - 1):
        prev = out[-1]
        lo = 0 if positive else min(prev) - 1
        nxt = {}
        for e in range(lo, max(prev) + 2):
            nxt[e] = prev.get(e - 1, 0) + t * prev.get(e, 0) + prev.get(e + 1, 0)
        out.append(nxt)
    return out


def trinomial_coefficient(n: int, end: int, t: int) -> int:
    """Coefficient of X^end in (1/X + t + X)^n, summed over neutral-step counts."""
    total = 0
    for k in range(n + 1):
        m = n - k
        if (m + end) % 2 or abs(end) > m:
            continue
        total += math.comb(n, k) * t**k * math.comb(m, (m + end) // 2)
    return total


def triangle(kind: str, rows: int, t: int = 0) -> TriangleTable:
    """Build a table by its recurrence and check it against a second construction.

    Pascal and trinomial rows are checked against closed-form coefficients;
    positive rows against the unrestricted table minus itself shifted by two.
    """
    if kind not in TABLE_KINDS:
        raise UsageError(f"unknown table kind {kind!r}")
    if rows < 1:
        raise UsageError("rows must be at least 1")
    if kind == "pascal":
        t = 0
    positive = kind == "positive"
    rec = _recurrence_rows(rows, t, positive)
    full = rec if not positive else _recurrence_rows(rows, t, False)
    table_rows, table_ends = [], []
    for n in range(rows):
        ends = _row_ends(kind, n, t)
        built = [rec[n].get(e, 0) for e in ends]
        if positive:
            other = [full[n].get(e, 0) - full[n].get(e + 2, 0) for e in ends]
            if full[n].get(-1, 0) - full[n].get(1, 0) != 0:
                raise RuntimeError(f"shifted subtraction nonzero at column -1, row {n}")
        else:
            other = [trinomial_coefficient(n, e, t) for e in ends]
        if built != other:
            raise RuntimeError(f"{kind} row {n}: recurrence {built} != check {other}")
        table_rows.append(built)
        table_ends.append(ends)
    return TriangleTable(kind, t, table_rows, table_ends)


# --- verification engine -----------------------------------------------------------


@dataclass
class VerificationReport:
    """Outcome of an exhaustive check.

    For identity checks the per-index results are stored in
    ``preserved_stats`` as ``("n=<i>", ok)`` pairs.
    """

    name: str
    length: int | None = None
    domain_size: int = 0
    codomain_size: int = 0
    injective: bool = True
    surjective: bool = True
    preserved_stats: list[tuple[str, bool]] = field(default_factory=list)
    counterexample: object = None

    @property
    def bijection_verified(self) -> bool:
        return self.injective and self.surjective and self.domain_size == self.codomain_size

    @property
    def ok(self) -> bool:
        return self.bijection_verified and all(ok for _, ok in self.preserved_stats)

    def summary(self) -> str:
        status = "OK" if self.ok else "FAIL"
        parts = [self.name]
        if self.length is not None:
            parts.append(f"length={self.length}")
        parts += [status, f"domain={self.domain_size}", f"codomain={self.codomain_size}"]
        if not self.ok:
            bad = [s for s, ok in self.preserved_stats if not ok]
            if not self.injective:
                bad.append("injective")
            if not self.surjective:
                bad.append("surjective")
            parts.append("failed=" + ",".join(bad))
            if self.counterexample is not None:
                parts.append(f"counterexample={_fmt(self.counterexample)}")
        return "\t".join(parts)


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(_fmt(y) for y in x) + ")"
    return str(x)


@dataclass(frozen=True)
class Context:
    t: int = 0
    step_set: StepSet | None = None


@dataclass(frozen=True)
class BijectionCheck:
    name: str
    domain: Callable[[int, Context, int | None], Iterable]
    func: Callable
    in_codomain: Callable[[object], bool]
    codomain_size: Callable[[int, Context], int]
    stats: tuple[tuple[str, Callable[[object, object], bool]], ...] = ()
    cap: Callable[[Context], int] = lambda ctx: default_cap(ctx.t, ctx.step_set)


def _almost_recurrent(w) -> bool:
    return w.end in (0, 1)


def _positive(w) -> bool:
    return w.min == 0


def _neutral_kinds(w: Walk1D) -> list[int]:
    return sorted(s.kind for s in w.steps if s.delta == 0)


def _cube_end(w: WalkND) -> bool:
    return all(x in (0, 1) for x in w.end)


def _require_step_set(ctx: Context) -> StepSet:
    if ctx.step_set is None:
        raise UsageError("this check needs a step set")
    return ctx.step_set


def _nd_domain(pred):
    def domain(n, ctx, cap):
        return enumerate_walks_nd(n, _require_step_set(ctx), pred, cap)

    return domain


def _ballots(n: int, cap: int | None, pred) -> Iterator[Ballot]:
    _check_cap(n, DEFAULT_CAP_BALLOT if cap is None else cap)
    return (b for b in ballot.all_ballots(n) if pred(b))


def _scenario(b: Ballot):
    return classify_ballot(b) if b.votes else None


def _winning(b: Ballot) -> bool:
    return b.alpha > b.beta


def _bad_winning_count(n: int, ctx: Context) -> int:
    return sum(math.comb(n - 1, a) for a in range(n // 2 + 1, n + 1)) if n else 0


def _same_votes(x: Ballot, y: Ballot) -> bool:
    return (x.alpha, x.beta) == (y.alpha, y.beta)


_THEOREM1 = BijectionCheck(
    name="theorem1",
    domain=lambda n, ctx, cap: enumerate_walks(n, ctx.t, _almost_recurrent, cap),
    func=rootops.theorem1_forward,
    in_codomain=_positive,
    codomain_size=lambda n, ctx: count_walks(n, ctx.t, positive=True),
    stats=(
        ("length", lambda x, y: len(x) == len(y)),
        ("neutral_count", lambda x, y: _neutral_kinds(x) == _neutral_kinds(y)),
        ("endpoint_law", lambda x, y: y.end == 2 * x.depth + x.end),
        ("inverse", lambda x, y: rootops.theorem1_inverse(y) == x),
    ),
)

_THEOREM1_INV = BijectionCheck(
    name="theorem1-inv",
    domain=lambda n, ctx, cap: enumerate_walks(n, ctx.t, _positive, cap),
    func=rootops.theorem1_inverse,
    in_codomain=_almost_recurrent,
    codomain_size=lambda n, ctx: count_walks(n, ctx.t, end=0) + count_walks(n, ctx.t, end=1),
    stats=(
        ("length", lambda x, y: len(x) == len(y)),
        ("inverse", lambda x, y: rootops.theorem1_forward(y) == x),
    ),
)

_THEOREM2 = BijectionCheck(
    name="theorem2",
    domain=_nd_domain(_cube_end),
    func=rootops.theorem2_forward,
    in_codomain=lambda w: w.in_orthant(),
    codomain_size=lambda n, ctx: sum(count_walks_nd(n, _require_step_set(ctx), orthant=True).values()),
    stats=(
        ("length", lambda x, y: len(x) == len(y)),
        ("order_independent",
         lambda x, y: rootops.theorem2_forward(x, order=range(x.n - 1, -1, -1)) == y),
        ("inverse", lambda x, y: rootops.theorem2_inverse(y) == x),
    ),
)

_THEOREM2_INV = BijectionCheck(
    name="theorem2-inv",
    domain=_nd_domain(lambda w: w.in_orthant()),
    func=rootops.theorem2_inverse,
    in_codomain=_cube_end,
    codomain_size=lambda n, ctx: sum(
        c for end, c in count_walks_nd(n, _require_step_set(ctx)).items()
        if all(x in (0, 1) for x in end)
    ),
    stats=(
        ("length", lambda x, y: len(x) == len(y)),
        ("order_independent",
         lambda x, y: rootops.theorem2_inverse(x, order=range(x.n - 1, -1, -1)) == y),
    ),
)


def _ugly_to_bad_check(name: str, f: Callable[[Ballot], Ballot]) -> BijectionCheck:
    return BijectionCheck(
        name=name,
        domain=lambda n, ctx, cap: _ballots(
            n, cap, lambda b: _winning(b) and _scenario(b) is Scenario.UGLY
        ),
        func=f,
        in_codomain=lambda b: _winning(b) and _scenario(b) is Scenario.BAD,
        codomain_size=_bad_winning_count,
        stats=(("vote_counts", _same_votes),),
        cap=lambda ctx: DEFAULT_CAP_BALLOT,
    )


def _lift_check(map_name: str) -> BijectionCheck:
    f = ballot.get_map(map_name)
    return BijectionCheck(
        name=f"lift:{map_name}",
        domain=lambda n, ctx, cap: _ballots(
            n, cap, lambda b: b.votes[:1] == "A" and b.margin in (1, 2)
        ),
        func=lambda s: ballot.lift(f, s)[0],
        in_codomain=lambda b: _scenario(b) is Scenario.GOOD,
        codomain_size=lambda n, ctx: count_walks(n - 1, positive=True) if n else 0,
        stats=(("length", lambda x, y: len(x) == len(y)),),
        cap=lambda ctx: DEFAULT_CAP_BALLOT,
    )


def _footnote_domain(n: int, ctx: Context, cap: int | None) -> Iterator[Ballot]:
    _check_cap(n, DEFAULT_CAP_FOOTNOTE if cap is None else cap)
    return (b for b in ballot.all_ballots(2 * n + 1) if _winning(b))


_FOOTNOTE = BijectionCheck(
    name="footnote",
    domain=_footnote_domain,
    func=ballot.footnote_bijection,
    in_codomain=lambda b: len(b) % 2 == 0,
    codomain_size=lambda n, ctx: 4**n,
    stats=(("inverse", lambda x, y: ballot.footnote_inverse(y) == x),),
    cap=lambda ctx: DEFAULT_CAP_FOOTNOTE,
)


def _concat_domain(n: int, ctx: Context, cap: int | None) -> Iterator[tuple[Walk1D, Walk1D]]:
    _check_cap(n + 1, default_cap(ctx.t) if cap is None else cap)
    for i in range(n + 1):
        recurrent = list(enumerate_walks(i, ctx.t, lambda w: w.end == 0, cap=n + 1))
        suffixes = list(
            enumerate_walks(n - i, ctx.t, lambda w: w.min == 0 and w.end % 2 == 0, cap=n + 1)
        )
        for r in recurrent:
            for s in suffixes:
                yield r, s


def _positive_odd(w: Walk1D) -> bool:
    return w.end > 0 and w.end % 2 == 1


_CONCAT = BijectionCheck(
    name="concat",
    domain=_concat_domain,
    func=lambda pair: rootops.concat_with_upstep(*pair),
    in_codomain=_positive_odd,
    codomain_size=lambda n, ctx: sum(
        c for e, c in end_counts(n + 1, ctx.t).items() if e > 0 and e % 2
    ),
    stats=(("inverse", lambda x, y: rootops.split_at_last_up_from_zero(y) == x),),
)


CHECKS: dict[str, BijectionCheck] = {
    c.name: c for c in (_THEOREM1, _THEOREM1_INV, _THEOREM2, _THEOREM2_INV, _FOOTNOTE, _CONCAT)
}
for _name, _f in ballot.UGLY_TO_BAD.items():
    CHECKS[_name] = _ugly_to_bad_check(_name, _f)
CHECKS["andre-inv"] = BijectionCheck(
    name="andre-inv",
    domain=lambda n, ctx, cap: _ballots(n, cap, lambda b: _winning(b) and _scenario(b) is Scenario.BAD),
    func=ballot.andre_inverse,
    in_codomain=lambda b: _winning(b) and _scenario(b) is Scenario.UGLY,
    codomain_size=_bad_winning_count,
    stats=(("vote_counts", _same_votes), ("inverse", lambda x, y: ballot.andre(y) == x)),
    cap=lambda ctx: DEFAULT_CAP_BALLOT,
)


def get_check(name: str) -> BijectionCheck:
    if name.startswith("lift:"):
        return _lift_check(name.split(":", 1)[1])
    try:
        return CHECKS[name]
    except KeyError:
        raise UnknownMap(f"no registered bijection {name!r}") from None


def verify_bijection(
    name: str,
    length: int,
    t: int = 0,
    step_set: StepSet | None = None,
    func: Callable | None = None,
    cap: int | None = None,
) -> VerificationReport:
    """Apply a registered map to its whole domain at ``length`` and audit the image.

    ``func`` substitutes a different map for the registered one (negative
    controls); domain, codomain and statistics stay those of ``name``.
    """
    check = get_check(name)
    ctx = Context(t, step_set)
    _check_cap(length, check.cap(ctx) if cap is None else cap)
    f = check.func if func is None else func
    report = VerificationReport(name=name, length=length)
    stat_ok = {s: True for s, _ in check.stats}
    seen: set = set()
    in_codomain = 0
    for x in check.domain(length, ctx, cap):
        report.domain_size += 1
        try:
            y = f(x)
        except PreconditionError as exc:
            report.injective = False
            if report.counterexample is None:
                report.counterexample = (x, type(exc).__name__)
            continue
        hit = check.in_codomain(y)
        fresh = y not in seen
        if not fresh:
            report.injective = False
        seen.add(y)
        if hit and fresh:
            in_codomain += 1
        failed = not hit or not fresh
        for s, pred in check.stats:
            try:
                good = pred(x, y)
            except PreconditionError:
                good = False
            if not good:
                stat_ok[s] = False
                failed = True
        if failed and report.counterexample is None:
            report.counterexample = (x, y)
    report.codomain_size = check.codomain_size(length, ctx)
    report.surjective = in_codomain == report.codomain_size
    report.preserved_stats = list(stat_ok.items())
    return report


# --- distributions -------------------------------------------------------------------

POPULATIONS: dict[str, Callable[[Walk1D], bool]] = {
    "all": lambda w: True,
    "positive": _positive,
    "recurrent": lambda w: w.end == 0,
    "almost-recurrent": _almost_recurrent,
}


def stat_function(stat: str) -> Callable[[Walk1D], int]:
    if stat == "depth":
        return lambda w: w.depth
    if stat == "end":
        return lambda w: w.end
    if stat in ("alternating_visits", "altvisits"):
        return ballot.alternating_visits
    for prefix in ("lift-iterations:", "lift-iters:"):
        if stat.startswith(prefix):
            f = ballot.get_map(stat[len(prefix) :])
            return lambda w: ballot.lift(f, ballot.unstrip("A", w))[1]
    raise UnknownStat(f"unknown statistic {stat!r}")


def distribution(
    stat: str, population: str, length: int, t: int = 0, cap: int | None = None
) -> dict[int, int]:
    fn = stat_function(stat)
    try:
        pred = POPULATIONS[population]
    except KeyError:
        raise UnknownStat(f"unknown population {population!r}") from None
    hist = Counter(fn(w) for w in enumerate_walks(length, t, pred, cap))
    return dict(sorted(hist.items()))


def distribution_tsv(hist: dict[int, int]) -> str:
    return "value\tcount\n" + "".join(f"{k}\t{v}\n" for k, v in hist.items())


def corollary_report(n: int, cap: int | None = None) -> VerificationReport:
    """Alternating-visit counts over almost-recurrent binary walks of length n."""
    hist = distribution("alternating_visits", "almost-recurrent", n, 0, cap)
    half = -(-n // 2)
    checks = []
    for d in range(n // 2 + 1):
        at_least = sum(c for k, c in hist.items() if k >= d)
        exact = hist.get(d, 0)
        expect = math.comb(n, half + d)
        checks.append((f"at_least_{d}", at_least == expect))
        checks.append((f"exactly_{d}", exact == expect - math.comb(n, half + d + 1)))
    total = sum(hist.values())
    checks.append(("range", all(0 <= k <= n // 2 for k in hist)))
    return VerificationReport(
        name="corollary", length=n, domain_size=total, codomain_size=total,
        preserved_stats=checks,
    )


def stats_equalities_report(n: int, cap: int | None = None) -> VerificationReport:
    """Depth, alternating visits and every lift-iteration count share one histogram."""
    names = ["depth", "alternating_visits"] + [f"lift-iterations:{m}" for m in ballot.UGLY_TO_BAD]
    base = distribution("depth", "almost-recurrent", n, 0, cap)
    checks = [(s, distribution(s, "almost-recurrent", n, 0, cap) == base) for s in names]
    total = sum(base.values())
    return VerificationReport(
        name="stats-equalities", length=n, domain_size=total, codomain_size=total,
        preserved_stats=checks,
    )
