"""Raising and lowering operators and the bijections built from them.

The raising operator reverses the down-step that first attains the global
minimum of a walk; the lowering operator reverses the up-step leaving the
last attainment of the minimum.  Iterating raising until the walk is
positive gives a length- and neutral-count-preserving bijection from walks
ending at 0 or 1 onto positive walks; :func:`theorem1_forward` does this in
a single pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadEndpoint, MinimumIsZero, NoSuchStep, NotInImage, NotPositive
from .walks import UP, Step, Walk1D, WalkND


def first_passage_positions(deltas: Iterable[int]) -> list[int]:
    """Indices of the steps that first reach -1, -2, ..., -depth."""
    out = []
    h = lo = 0
    for i, d in enumerate(deltas):
        h += d
        if h < lo:
            lo = h
            out.append(i)
    return out


def _last_visits(heights: Sequence[int]) -> dict[int, int]:
    last: dict[int, int] = {}
    for j, h in enumerate(heights):
        last[h] = j
    return last


def last_exit_positions(heights: Sequence[int], levels: Iterable[int]) -> list[int]:
    """Indices of the steps leaving the last visit to each of ``levels``.

    Every requested level must be visited before the walk's end.
    """
    last = _last_visits(heights)
    n = len(heights) - 1
    out = []
    for k in levels:
        j = last.get(k)
        if j is None or j == n:
            raise NoSuchStep(f"no step leaves the last visit to {k}")
        out.append(j)
    return out


def raise_walk(w: Walk1D) -> Walk1D:
    lo = w.min
    if lo == 0:
        raise MinimumIsZero("walk never goes below 0; raising is undefined")
    j = w.heights.index(lo)
    return w.flipped([j - 1])


def lower_walk(w: Walk1D) -> Walk1D:
    lo = w.min
    heights = w.heights
    j = len(heights) - 1 - heights[::-1].index(lo)
    if j == len(w.steps) or w.steps[j].delta != 1:
        raise NotInImage("the last visit to the minimum is not followed by an up-step")
    return w.flipped([j])


def theorem1_flips(w: Walk1D) -> list[int]:
    """Positions reversed by :func:`theorem1_forward`, in increasing order."""
    if w.end not in (0, 1):
        raise BadEndpoint(f"walk ends at {w.end}, expected 0 or 1")
    return first_passage_positions(s.delta for s in w.steps)


def theorem1_forward(w: Walk1D) -> Walk1D:
    return w.flipped(theorem1_flips(w))


def theorem1_inverse(w: Walk1D) -> Walk1D:
    if w.min < 0:
        raise NotPositive(f"walk visits {w.min}")
    d = w.end // 2
    return w.flipped(last_exit_positions(w.heights, range(d)))


@dataclass(frozen=True)
class MotzkinDecomposition:
    """Alternating Motzkin factors and single steps.

    ``motzkin`` holds the ``2d+e+1`` Motzkin walks (each rebased to start at
    0), ``singles`` the ``2d+e`` non-stationary steps between them: ``d``
    down-steps followed by ``d+e`` up-steps.
    """

    motzkin: tuple[Walk1D, ...]
    singles: tuple[Step, ...]
    d: int
    e: int

    @property
    def factors(self) -> list:
        out: list = [self.motzkin[0]]
        for s, m in zip(self.singles, self.motzkin[1:]):
            out.extend((s, m))
        return out

    def concat(self) -> Walk1D:
        steps: list[Step] = list(self.motzkin[0].steps)
        for s, m in zip(self.singles, self.motzkin[1:]):
            steps.append(s)
            steps.extend(m.steps)
        return Walk1D(tuple(steps), self.motzkin[0].t)


def single_positions(w: Walk1D) -> list[int]:
    """Indices of the steps lying in no Motzkin factor."""
    downs = first_passage_positions(s.delta for s in w.steps)
    ups = last_exit_positions(w.heights, range(w.min, w.end))
    return downs + ups


def motzkin_decompose(w: Walk1D) -> MotzkinDecomposition:
    pos = single_positions(w)
    cuts = [-1, *pos, len(w.steps)]
    motzkin = tuple(
        Walk1D(w.steps[a + 1 : b], w.t) for a, b in zip(cuts, cuts[1:])
    )
    singles = tuple(w.steps[p] for p in pos)
    d = w.depth
    return MotzkinDecomposition(motzkin, singles, d, w.end)


def reverse_negate(w: Walk1D) -> Walk1D:
    return Walk1D(tuple(s.negated() for s in reversed(w.steps)), w.t)


def full_lower(w: Walk1D) -> Walk1D:
    if w.min < 0:
        raise NotPositive(f"walk visits {w.min}")
    while w.end != w.min:
        w = lower_walk(w)
    return w


# --- Z^n -------------------------------------------------------------------


def _negate_coord(steps: list, positions: Iterable[int], c: int) -> None:
    for p in positions:
        s = steps[p]
        steps[p] = s[:c] + (-s[c],) + s[c + 1 :]


def theorem2_forward(w: WalkND, order: Sequence[int] | None = None) -> WalkND:
    end = w.end
    if any(x not in (0, 1) for x in end):
        raise BadEndpoint(f"walk ends at {end}, expected a vertex of the unit cube")
    steps = list(w.steps)
    for c in order if order is not None else range(w.n):
        _negate_coord(steps, first_passage_positions(s[c] for s in steps), c)
    return WalkND(tuple(steps), w.step_set)


def theorem2_inverse(w: WalkND, order: Sequence[int] | None = None) -> WalkND:
    for c in range(w.n):
        if min(w.heights(c)) < 0:
            raise NotPositive(f"coordinate {c} goes negative")
    steps = list(w.steps)
    end = w.end
    for c in order if order is not None else range(w.n):
        heights = [0]
        for s in steps:
            heights.append(heights[-1] + s[c])
        _negate_coord(steps, last_exit_positions(heights, range(end[c] // 2)), c)
    return WalkND(tuple(steps), w.step_set)


# --- convolution -----------------------------------------------------------


def concat_with_upstep(recurrent: Walk1D, suffix: Walk1D) -> Walk1D:
    if recurrent.end != 0:
        raise BadEndpoint(f"first factor ends at {recurrent.end}, expected 0")
    if suffix.min < 0:
        raise NotPositive("second factor visits a negative number")
    if suffix.end % 2:
        raise BadEndpoint(f"second factor ends at odd {suffix.end}")
    t = max(recurrent.t, suffix.t)
    return Walk1D(recurrent.steps + (UP,) + suffix.steps, t)


def split_at_last_up_from_zero(w: Walk1D) -> tuple[Walk1D, Walk1D]:
    if w.end <= 0 or w.end % 2 == 0:
        raise BadEndpoint(f"walk ends at {w.end}, expected a positive odd number")
    (j,) = last_exit_positions(w.heights, [0])
    if w.steps[j].delta != 1:
        raise NoSuchStep("last visit to 0 is not followed by an up-step")
    return Walk1D(w.steps[:j], w.t), Walk1D(w.steps[j + 1 :], w.t)
