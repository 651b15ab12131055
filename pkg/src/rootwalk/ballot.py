"""Ballot sequences and bijections from ugly to bad sequences.

A ballot sequence is a string over ``A`` and ``B``.  It is *bad* if the
first vote goes to B, *good* if A leads strictly after every vote, and
*ugly* otherwise.  Every map registered in :data:`UGLY_TO_BAD` sends
ugly sequences to bad ones with the same vote counts; :func:`lift` iterates
any of them into a bijection onto good sequences.
"""

from __future__ import annotations

import enum
import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, NamedTuple

from . import rootops
from .errors import (
    BadInput,
    EmptySequence,
    EvenLength,
    NoFlips,
    NoNegativeVisit,
    NotBad,
    NotEnoughVisits,
    NotUgly,
    NoWinner,
    OddLength,
    ParseError,
    UnknownMap,
)
from .walks import DOWN, UP, Walk1D


class Scenario(enum.Enum):
    GOOD = "good"
    BAD = "bad"
    UGLY = "ugly"


@dataclass(frozen=True)
class Ballot:
    votes: str

    def __post_init__(self):
        if self.votes.strip("AB"):
            raise ParseError(f"ballot sequence {self.votes!r} contains characters other than A/B")

    @functools.cached_property
    def margins(self) -> tuple[int, ...]:
        """m_0 = 0 and m_j = (#A - #B) among the first j votes."""
        return tuple(itertools.accumulate((1 if v == "A" else -1 for v in self.votes), initial=0))

    def __str__(self) -> str:
        return self.votes

    def __len__(self) -> int:
        return len(self.votes)

    @property
    def alpha(self) -> int:
        return self.votes.count("A")

    @property
    def beta(self) -> int:
        return self.votes.count("B")

    @property
    def margin(self) -> int:
        return self.votes.count("A") - self.votes.count("B")

    def zero_returns(self) -> list[int]:
        """Vote counts j >= 1 after which the margin is 0."""
        return [j for j, m in enumerate(self.margins) if j and m == 0]


def parse_ballot(text: str) -> Ballot:
    return Ballot(text)


_COMPLEMENT = str.maketrans("AB", "BA")


def complement(votes: str) -> str:
    return votes.translate(_COMPLEMENT)


def classify_ballot(s: Ballot) -> Scenario:
    if not s.votes:
        raise EmptySequence("empty ballot sequence")
    if s.votes[0] == "B":
        return Scenario.BAD
    if min(s.margins[1:]) >= 1:
        return Scenario.GOOD
    return Scenario.UGLY


def _require_ugly(s: Ballot) -> None:
    if classify_ballot(s) is not Scenario.UGLY:
        raise NotUgly(f"{s.votes} is not ugly")


def strip(s: Ballot) -> Walk1D:
    if not s.votes:
        raise EmptySequence("cannot strip an empty ballot sequence")
    return Walk1D(tuple(UP if v == "A" else DOWN for v in s.votes[1:]))


def unstrip(first: str, w: Walk1D) -> Ballot:
    if first not in ("A", "B"):
        raise ParseError(f"first vote must be A or B, got {first!r}")
    tail = []
    for step in w.steps:
        if step.delta == 0:
            raise ParseError("neutral steps have no ballot counterpart")
        tail.append("A" if step.delta > 0 else "B")
    return Ballot(first + "".join(tail))


# --- ugly -> bad maps ------------------------------------------------------


def andre(s: Ballot) -> Ballot:
    """Swap the blocks before and from the vote that levels A's lead."""
    _require_ugly(s)
    j = s.zero_returns()[0]
    v = s.votes
    return Ballot(v[j - 1 :] + v[: j - 1])


def andre_inverse(s: Ballot) -> Ballot:
    if not s.votes or s.votes[0] != "B":
        raise NotBad(f"{s.votes} is not bad")
    if s.alpha <= s.beta:
        raise NoWinner(f"{s.votes}: A does not win")
    final = s.margin
    j = max(j for j, m in enumerate(s.margins) if j and m == final and s.votes[j - 1] == "A")
    v = s.votes
    return Ballot(v[j - 1 :] + v[: j - 1])


def andre_stripped(w: Walk1D) -> Walk1D:
    """Remove the step first reaching -1 and swap the parts around an up-step."""
    if w.min >= 0:
        raise NoNegativeVisit("walk never visits -1")
    p = w.heights.index(-1) - 1
    return Walk1D(w.steps[p + 1 :] + (UP,) + w.steps[:p], w.t)


def reflect_kth(s: Ballot, k: int, fallback: bool = False) -> Ballot:
    """Complement the votes up to the k-th return of the margin to 0.

    With ``fallback`` the last return is used when there are fewer than k.
    """
    _require_ugly(s)
    if k < 1:
        raise NotEnoughVisits(f"k must be at least 1, got {k}")
    zeros = s.zero_returns()
    if len(zeros) < k:
        if not fallback:
            raise NotEnoughVisits(f"{s.votes} returns to 0 only {len(zeros)} time(s)")
        k = len(zeros)
    j = zeros[k - 1]
    return Ballot(complement(s.votes[:j]) + s.votes[j:])


def reflect_first(s: Ballot) -> Ballot:
    return reflect_kth(s, 1)


def reflect_second(s: Ballot) -> Ballot:
    return reflect_kth(s, 2, fallback=True)


def reflect_last(s: Ballot) -> Ballot:
    _require_ugly(s)
    j = s.zero_returns()[-1]
    return Ballot(complement(s.votes[:j]) + s.votes[j:])


def central_first(s: Ballot) -> Ballot:
    """Reverse the order of the votes up to the first return to 0."""
    _require_ugly(s)
    j = s.zero_returns()[0]
    return Ballot(s.votes[:j][::-1] + s.votes[j:])


def raise_as_ugly_to_bad(s: Ballot) -> Ballot:
    _require_ugly(s)
    return unstrip("B", rootops.raise_walk(strip(s)))


UGLY_TO_BAD: dict[str, Callable[[Ballot], Ballot]] = {
    "andre": andre,
    "reflect-first": reflect_first,
    "reflect-second": reflect_second,
    "reflect-last": reflect_last,
    "central": central_first,
    "raise-ballot": raise_as_ugly_to_bad,
}

_ALIASES = {"raise": "raise-ballot", "central-first": "central"}


def get_map(name: str) -> Callable[[Ballot], Ballot]:
    key = _ALIASES.get(name, name)
    try:
        return UGLY_TO_BAD[key]
    except KeyError:
        raise UnknownMap(f"unknown ugly-to-bad map {name!r}") from None


def lift(f: str | Callable[[Ballot], Ballot], s: Ballot) -> tuple[Ballot, int]:
    """Iterate ``f`` and re-flip the leading B until the sequence is good.

    Returns the good sequence and the number of iterations.
    """
    if isinstance(f, str):
        f = get_map(f)
    if not s.votes or s.votes[0] == "B":
        raise BadInput(f"{s.votes!r} is empty or bad")
    if s.margin not in (1, 2):
        raise BadInput(f"final margin {s.margin} is not 1 or 2")
    count = 0
    while classify_ballot(s) is Scenario.UGLY:
        image = f(s)
        if image.votes[0] != "B" or (image.alpha, image.beta) != (s.alpha, s.beta):
            raise RuntimeError(f"map returned {image.votes} for ugly {s.votes}")
        s = Ballot("A" + image.votes[1:])
        count += 1
    return s, count


# --- footnote bijection -----------------------------------------------------


def footnote_bijection(s: Ballot) -> Ballot:
    """Odd-length sequences won by A to arbitrary sequences one vote shorter."""
    if len(s) % 2 == 0:
        raise EvenLength(f"length {len(s)} is even")
    if s.alpha <= s.beta:
        raise NoWinner(f"{s.votes}: A does not win")
    rest = s.votes[1:]
    return Ballot(rest if s.votes[0] == "A" else complement(rest))


def footnote_inverse(s: Ballot) -> Ballot:
    if len(s) % 2:
        raise OddLength(f"length {len(s)} is odd")
    if s.margin >= 0:
        return Ballot("A" + s.votes)
    return Ballot("B" + complement(s.votes))


# --- statistics and counts --------------------------------------------------


def alternating_visits(w: Walk1D) -> int:
    """Count the visits found scanning backwards for -1, then 1, then -1, ..."""
    count = 0
    target = -1
    for h in reversed(w.heights):
        if h == target:
            count += 1
            target = -target
    return count


class BallotCounts(NamedTuple):
    total: int
    good: int
    bad: int
    ugly: int
    probability: Fraction


def ballot_counts(alpha: int, beta: int) -> BallotCounts:
    if not alpha > beta >= 0:
        raise NoWinner(f"need alpha > beta >= 0, got ({alpha}, {beta})")
    mu = alpha + beta
    bad = math.comb(mu - 1, alpha)
    good = math.comb(mu - 1, alpha - 1) - math.comb(mu - 1, alpha)
    return BallotCounts(
        total=math.comb(mu, alpha),
        good=good,
        bad=bad,
        ugly=bad,
        probability=Fraction(alpha - beta, mu),
    )


def eq4_holds(alpha: int, beta: int) -> bool:
    mu = alpha + beta
    lhs = math.comb(mu, alpha) - 2 * math.comb(mu - 1, alpha)
    return lhs == math.comb(mu - 1, alpha - 1) - math.comb(mu - 1, alpha)


def andre_from_theorem1(w: Walk1D) -> Walk1D:
    flips = rootops.theorem1_flips(w)
    if not flips:
        raise NoFlips("walk is already positive")
    raised = w.flipped(flips)
    p = flips[-1]
    return Walk1D(raised.steps[p + 1 :] + (UP,) + raised.steps[:p], w.t)


def all_ballots(length: int) -> Iterator[Ballot]:
    for votes in itertools.product("AB", repeat=length):
        yield Ballot("".join(votes))
