"""Walks on Z and Z^n: value types, statistics and text encodings.

A one-dimensional walk is a tuple of :class:`Step` values starting at 0.
Up and down steps carry kind 0; neutral steps carry a kind index below the
alphabet size ``t``.  Text encoding: ``U``, ``D`` and ``N<digits>``
(``N`` alone is kind 0).

Walks on Z^n are tuples of integer vectors drawn from a :class:`StepSet`
and are encoded as ``.``-separated groups over ``+``, ``0``, ``-``.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass, field
from itertools import accumulate
from operator import itemgetter
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

from .errors import NotClosed, ParseError, StepNotInSet


class Step(NamedTuple):
    delta: int
    kind: int = 0

    def negated(self) -> Step:
        if self.delta == 0:
            return self
        return UP if self.delta < 0 else DOWN


UP = Step(1)
DOWN = Step(-1)


def neutral(kind: int = 0) -> Step:
    return Step(0, kind)


_delta = itemgetter(0)


@functools.lru_cache(maxsize=None)
def _allowed_steps(t: int) -> frozenset[Step]:
    return frozenset([UP, DOWN, *(neutral(k) for k in range(t))])


@dataclass(frozen=True)
class Walk1D:
    """Immutable walk on Z over an alphabet with ``t`` neutral kinds."""

    steps: tuple[Step, ...] = ()
    t: int = 0
    heights: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        steps = tuple(self.steps)
        if not _allowed_steps(self.t).issuperset(steps):
            for s in steps:
                if s.delta not in (-1, 0, 1):
                    raise ValueError(f"invalid step delta {s.delta}")
                if s.delta != 0 and s.kind != 0:
                    raise ValueError("non-neutral steps must have kind 0")
                if s.delta == 0 and not 0 <= s.kind < self.t:
                    raise ValueError(f"neutral kind {s.kind} not below t={self.t}")
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "heights", tuple(accumulate(map(_delta, steps), initial=0)))

    @classmethod
    def from_deltas(cls, deltas: Iterable[int], t: int = 0) -> Walk1D:
        return cls(tuple(Step(d) for d in deltas), t)

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return format_walk(self)

    @property
    def end(self) -> int:
        return self.heights[-1]

    @property
    def min(self) -> int:
        return min(self.heights)

    @property
    def depth(self) -> int:
        return -min(self.heights)

    def replace_steps(self, steps: Sequence[Step]) -> Walk1D:
        return Walk1D(tuple(steps), self.t)

    def flipped(self, positions: Iterable[int]) -> Walk1D:
        """Return a copy with the steps at ``positions`` reversed in direction."""
        steps = list(self.steps)
        for p in positions:
            steps[p] = steps[p].negated()
        return Walk1D(tuple(steps), self.t)


class WalkStats(NamedTuple):
    length: int
    end: int
    min: int
    depth: int
    neutral_count: int


class WalkClass(NamedTuple):
    positive: bool
    recurrent: bool
    almost_recurrent: bool


_TOKEN = re.compile(r"U|D|N(\d*)")


def parse_walk(text: str, t: int = 0) -> Walk1D:
    steps = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unknown character {text[pos]!r} at position {pos}")
        tok = m.group(0)
        if tok == "U":
            steps.append(UP)
        elif tok == "D":
            steps.append(DOWN)
        else:
            kind = int(m.group(1) or 0)
            if kind >= t:
                raise ParseError(f"neutral kind {kind} not allowed with t={t}")
            steps.append(neutral(kind))
        pos = m.end()
    return Walk1D(tuple(steps), t)


def format_walk(w: Walk1D) -> str:
    out = []
    for s in w.steps:
        if s.delta > 0:
            out.append("U")
        elif s.delta < 0:
            out.append("D")
        elif w.t <= 1:
            out.append("N")
        else:
            out.append(f"N{s.kind}")
    return "".join(out)


def stats(w: Walk1D) -> WalkStats:
    lo = w.min
    return WalkStats(
        length=len(w.steps),
        end=w.end,
        min=lo,
        depth=-lo,
        neutral_count=sum(1 for s in w.steps if s.delta == 0),
    )


def classify(w: Walk1D) -> WalkClass:
    end = w.end
    return WalkClass(positive=w.min == 0, recurrent=end == 0, almost_recurrent=end in (0, 1))


def is_positive(w: Walk1D) -> bool:
    return w.min == 0


def is_almost_recurrent(w: Walk1D) -> bool:
    return w.end in (0, 1)


# --- n-dimensional walks ---------------------------------------------------

_CHAR_TO_DELTA = {"+": 1, "0": 0, "-": -1}
_DELTA_TO_CHAR = {1: "+", 0: "0", -1: "-"}

StepND = tuple[int, ...]


def format_step_nd(step: StepND) -> str:
    return "".join(_DELTA_TO_CHAR[d] for d in step)


def parse_step_nd(group: str) -> StepND:
    try:
        return tuple(_CHAR_TO_DELTA[c] for c in group)
    except KeyError as exc:
        raise ParseError(f"malformed step group {group!r}") from exc


@dataclass(frozen=True)
class StepSet:
    """Finite set of steps in {-1,0,1}^n closed under single-coordinate negation."""

    n: int
    members: frozenset[StepND]

    def __post_init__(self):
        members = frozenset(tuple(m) for m in self.members)
        if self.n < 1:
            raise NotClosed("dimension must be at least 1")
        for m in members:
            if len(m) != self.n or any(d not in (-1, 0, 1) for d in m):
                raise NotClosed(f"step {m} is not in {{-1,0,1}}^{self.n}")
        for m in members:
            for c in range(self.n):
                mirror = m[:c] + (-m[c],) + m[c + 1 :]
                if mirror not in members:
                    raise NotClosed(
                        f"step {format_step_nd(m)} has mirror {format_step_nd(mirror)} "
                        f"outside the set (coordinate {c})"
                    )
        object.__setattr__(self, "members", members)

    @classmethod
    def full(cls, n: int) -> StepSet:
        return cls(n, frozenset(itertools.product((-1, 0, 1), repeat=n)))

    def ordered(self) -> list[StepND]:
        """Members in enumeration order: per coordinate ``+`` < ``0`` < ``-``."""
        return sorted(self.members, key=lambda m: tuple(-d for d in m))

    def __contains__(self, step) -> bool:
        return tuple(step) in self.members

    def __len__(self) -> int:
        return len(self.members)


def parse_step_set(text: str) -> StepSet:
    members = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        step = parse_step_nd(line)
        if members and len(step) != len(members[0]):
            raise ParseError(f"line {lineno}: step {line!r} has wrong dimension")
        members.append(step)
    if not members:
        raise ParseError("step set file contains no steps")
    return StepSet(len(members[0]), frozenset(members))


def load_step_set(path: str | Path) -> StepSet:
    return parse_step_set(Path(path).read_text())


@dataclass(frozen=True)
class WalkND:
    steps: tuple[StepND, ...]
    step_set: StepSet = field(compare=False)

    def __post_init__(self):
        steps = self.steps if type(self.steps) is tuple else tuple(self.steps)
        try:
            ok = self.step_set.members.issuperset(steps)
        except TypeError:
            steps = tuple(tuple(s) for s in steps)
            ok = self.step_set.members.issuperset(steps)
        if not ok:
            for s in steps:
                if s not in self.step_set.members:
                    raise StepNotInSet(f"step {format_step_nd(s)} is not in the step set")
        object.__setattr__(self, "steps", steps)

    @property
    def n(self) -> int:
        return self.step_set.n

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return format_walk_nd(self)

    def projection(self, coord: int) -> tuple[int, ...]:
        return tuple(s[coord] for s in self.steps)

    def heights(self, coord: int) -> tuple[int, ...]:
        return tuple(itertools.accumulate(self.projection(coord), initial=0))

    @property
    def end(self) -> tuple[int, ...]:
        if not self.steps:
            return (0,) * self.n
        return tuple(map(sum, zip(*self.steps)))

    def in_orthant(self) -> bool:
        return all(min(self.heights(c)) >= 0 for c in range(self.n))


def parse_walk_nd(text: str, step_set: StepSet) -> WalkND:
    if text == "":
        return WalkND((), step_set)
    steps = []
    for group in text.split("."):
        step = parse_step_nd(group)
        if len(step) != step_set.n:
            raise ParseError(f"step group {group!r} does not have {step_set.n} characters")
        steps.append(step)
    return WalkND(tuple(steps), step_set)


def format_walk_nd(w: WalkND) -> str:
    return ".".join(format_step_nd(s) for s in w.steps)
