"""Acceptance criteria, each checked exactly at its full stated size.

Every test carries a ``criterion`` marker; conftest prints one PASS/FAIL
line per criterion at the end of the run.
"""

from __future__ import annotations

from math import comb

import pytest

import brute
from rootwalk import census, series
from rootwalk.ballot import (
    UGLY_TO_BAD,
    Ballot,
    alternating_visits,
    andre_from_theorem1,
    ballot_counts,
    eq4_holds,
    lift,
    strip,
    unstrip,
)
from rootwalk.census import count_walks, enumerate_walks, triangle, verify_bijection
from rootwalk.cli import main
from rootwalk.rootops import theorem1_forward
from rootwalk.walks import StepSet, Walk1D


def _failures(reports):
    return [r.summary() for r in reports if not r.ok]


@pytest.mark.criterion("1. theorem1 bijection exhaustive (t=0 <=14, t=1 <=9, t=2 <=7)")
def test_criterion_1_theorem1():
    reports = [
        verify_bijection("theorem1", n, t)
        for t, top in ((0, 14), (1, 9), (2, 7))
        for n in range(top + 1)
    ]
    assert _failures(reports) == []
    for r in reports:
        names = {name for name, _ in r.preserved_stats}
        assert {"length", "neutral_count", "endpoint_law"} <= names
        assert r.domain_size == r.codomain_size


@pytest.mark.criterion("2. positive ends at length 8 = 14,28,20,7,1; Pascal row 8")
def test_criterion_2_positive_and_pascal():
    assert triangle("positive", 9, t=0).rows[8] == [14, 28, 20, 7, 1]
    assert triangle("pascal", 9).rows[8] == [1, 8, 28, 56, 70, 56, 28, 8, 1]
    oracle = brute.count_positive_by_end(8)
    assert [oracle[e] for e in (0, 2, 4, 6, 8)] == [14, 28, 20, 7, 1]
    assert [comb(8, k) for k in range(9)] == [1, 8, 28, 56, 70, 56, 28, 8, 1]


@pytest.mark.criterion("3. trinomial row 7 and trinomial-positive row 7 (sum 750 = 393 + 357)")
def test_criterion_3_trinomial():
    tri = triangle("trinomial", 8, t=1).rows[7]
    assert tri[:8] == [1, 7, 28, 77, 161, 266, 357, 393]
    assert tri == tri[::-1]
    pos = triangle("positive", 8, t=1).rows[7]
    assert pos == [127, 196, 189, 133, 70, 27, 7, 1]
    assert sum(pos) == 750 == 393 + 357
    oracle = brute.count_positive_by_end(7, 1)
    assert [oracle.get(e, 0) for e in range(8)] == pos


@pytest.mark.criterion("4. theorem2 exhaustive for {-1,0,1}^2 (<=6) and {(+-1,+-1),(0,0)} (<=8)")
def test_criterion_4_theorem2():
    full = StepSet.full(2)
    diag = StepSet(2, frozenset({(1, 1), (1, -1), (-1, 1), (-1, -1), (0, 0)}))
    reports = [verify_bijection("theorem2", n, step_set=full) for n in range(7)]
    reports += [verify_bijection("theorem2", n, step_set=diag) for n in range(9)]
    assert _failures(reports) == []
    for r in reports:
        assert "order_independent" in {name for name, _ in r.preserved_stats}


@pytest.mark.criterion("5. eq1 (n<=30), eq2 (l<=20, census l<=10), eq3 (deg 24), R_2 = C(2n,n) (n<=20)")
def test_criterion_5_series_identities():
    reports = [series.check_eq1(30), series.check_t2_coincidence(20)]
    for t in series.DEFAULT_T_VALUES:
        reports.append(series.check_eq2(t, 20))
        reports.append(series.check_eq3(t, 24))
    assert _failures(reports) == []
    for t in (0, 1, 2):
        for l in range(11):
            lhs, _ = series.eq2_sides(t, l)
            census_count = sum(
                1 for w in enumerate_walks(l + 1, t, lambda w: w.end > 0 and w.end % 2 == 1, cap=11)
            )
            assert lhs == census_count, (t, l)


@pytest.mark.criterion("6. ballot counts (a+b<=14), eq4 (a+b<=40), six ugly->bad bijections (a+b<=14)")
def test_criterion_6_ballots():
    for mu in range(1, 15):
        for a in range(mu // 2 + 1, mu + 1):
            b = mu - a
            tally = {"good": 0, "bad": 0, "ugly": 0}
            for s in brute.ballots(a, b):
                tally[brute.ballot_scenario(s)] += 1
            c = ballot_counts(a, b)
            assert (c.good, c.bad, c.ugly, c.total) == (
                tally["good"], tally["bad"], tally["ugly"], comb(mu, a)
            ), (a, b)
    for mu in range(1, 41):
        for a in range(mu // 2 + 1, mu + 1):
            assert eq4_holds(a, mu - a), (a, mu - a)
    assert len(UGLY_TO_BAD) == 6
    reports = [verify_bijection(name, mu) for name in UGLY_TO_BAD for mu in range(1, 15)]
    assert _failures(reports) == []
    for r in reports:
        assert dict(r.preserved_stats)["vote_counts"]


def _lift_domain(mu):
    for a in range(mu + 1):
        for s in brute.ballots(a, mu - a):
            if s[0] == "A" and 2 * a - mu in (1, 2):
                yield Ballot(s)


@pytest.mark.criterion("7. lift bijections (<=13), lift(raise) = theorem1, iteration counts")
def test_criterion_7_lifting():
    reports = [verify_bijection(f"lift:{name}", mu) for name in UGLY_TO_BAD for mu in range(1, 14)]
    assert _failures(reports) == []
    for mu in range(1, 14):
        for s in _lift_domain(mu):
            w = strip(s)
            good, raise_count = lift("raise-ballot", s)
            assert good == unstrip("A", theorem1_forward(w))
            assert raise_count == w.depth
            assert lift("andre", s)[1] == w.depth
            assert lift("reflect-last", s)[1] == alternating_visits(w)


@pytest.mark.criterion("8. corollary counts (n<=14) and coinciding statistic histograms (<=12)")
def test_criterion_8_corollary():
    reports = [census.corollary_report(n) for n in range(15)]
    reports += [census.stats_equalities_report(n) for n in range(13)]
    assert _failures(reports) == []
    for n in range(15):
        hist: dict[int, int] = {}
        for w in brute.all_walks(n):
            if brute.end(w) in (0, 1):
                k = alternating_visits(Walk1D.from_deltas([1 if c == "U" else -1 for c in w]))
                hist[k] = hist.get(k, 0) + 1
        half = -(-n // 2)
        for d in range(n // 2 + 1):
            assert sum(c for k, c in hist.items() if k >= d) == comb(n, half + d)


@pytest.mark.criterion("9. footnote bijection (n<=9) and andre_from_theorem1 = strip(lift(andre)) (<=12)")
def test_criterion_9_footnote_and_andre():
    reports = [verify_bijection("footnote", n) for n in range(10)]
    assert _failures(reports) == []
    checked = 0
    for n in range(13):
        for w in enumerate_walks(n, 0, lambda w: w.end in (0, 1) and w.min < 0):
            assert andre_from_theorem1(w) == strip(lift("andre", unstrip("A", w))[0])
            checked += 1
    assert checked == sum(count_walks(n, end=e) for n in range(13) for e in (0, 1)) - sum(
        count_walks(n, positive=True, end=e) for n in range(13) for e in (0, 1)
    )


@pytest.mark.criterion("10. CLI golden outputs and exit codes")
def test_criterion_10_cli(capsys):
    assert main(["table", "--kind", "positive", "--rows", "9", "--t", "0"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "14\t28\t20\t7\t1"
    assert main(["identity", "--which", "eq1", "--max", "20"]) == 0
    out = capsys.readouterr().out
    assert out == "".join(f"eq1\tn={k}\tOK\n" for k in range(21))
    assert main(["stats", "--stat", "end", "--len", "8", "--t", "0", "--population", "positive"]) == 0
    assert capsys.readouterr().out == "value\tcount\n0\t14\n2\t28\n4\t20\n6\t7\n8\t1\n"
    assert main(["apply", "--op", "raise", "--walk", "UD"]) == 1
    assert main(["verify", "--what", "theorem1", "--max-len", "99"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["table", "--kind", "hexagonal", "--rows", "3"])
    assert exc.value.code == 2
