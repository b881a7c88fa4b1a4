"""Finite symbolic descriptors, with decidable membership, for the infinite
subsets the topology machinery needs: diagonal up-sets, half-planes, and the
sequence-parameterized staircase region removed from every basic neighborhood
of zero in the locally compact family.

Geometry.  An up-set ``↑(a,b)`` is the down-left diagonal ray
``{(x, x-(a-b)) : x <= a}``.  The staircase is a union of such rays, exactly
one per diagonal: writing d = x-y for the diagonal difference, the covering
ray's top x-coordinate is

    level(d) = 0        for d = 0 and 1 <= d < x_1,
    level(d) = -j       for x_j <= d < x_{j+1},
    level(d) = -d       for 1 <= -d < y_1,
    level(d) = -i + d   for y_i <= -d < y_{i+1},

so deeper diagonals are covered from lower down, every ray meets the
staircase in all but finitely many points, and only finitely many covering
rays reach into any right half-plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .core import DomainError, Element, Pair, is_zero
from .sequences import SequencePair


@dataclass(frozen=True)
class UpSet:
    """All elements above the apex in the natural order: a down-left ray."""

    apex: Pair

    @property
    def diff(self) -> int:
        return self.apex[0] - self.apex[1]


@dataclass(frozen=True)
class DiagonalSegment:
    """The finite diagonal run {(x, x-diff) : x_lo <= x <= x_hi}; empty iff x_lo > x_hi."""

    diff: int
    x_lo: int
    x_hi: int

    def is_empty(self) -> bool:
        return self.x_lo > self.x_hi

    def points(self) -> list[Pair]:
        return [(x, x - self.diff) for x in range(self.x_lo, self.x_hi + 1)]


@dataclass(frozen=True)
class RightHalf:
    a: int


@dataclass(frozen=True)
class UpperHalf:
    b: int


@dataclass(frozen=True)
class Corner:
    a: int
    b: int


QuadrantSet = Union[RightHalf, UpperHalf, Corner]


def upset_member(u: UpSet, x: Element) -> bool:
    if is_zero(x):
        return False
    a, b = u.apex
    return a - b == x[0] - x[1] and x[0] <= a


def quadrant_member(q: QuadrantSet, x: Element) -> bool:
    """Half-planes and corners always contain zero."""
    if is_zero(x):
        return True
    if isinstance(q, RightHalf):
        return x[0] >= q.a
    if isinstance(q, UpperHalf):
        return x[1] >= q.b
    return x[0] >= q.a and x[1] >= q.b


def upset_trace(u: UpSet, q: QuadrantSet) -> DiagonalSegment:
    """Exact intersection of a ray with a half-plane, as a segment in increasing x."""
    a, b = u.apex
    if isinstance(q, RightHalf):
        return DiagonalSegment(a - b, q.a, a)
    if isinstance(q, UpperHalf):
        return DiagonalSegment(a - b, q.b + a - b, a)
    raise DomainError("trace is defined for half-planes only")


@dataclass(frozen=True)
class Staircase:
    """The removed region: one covering ray per diagonal, parameterized by a
    sequence pair (x-sequence for positive differences, y-sequence for
    negative ones)."""

    seqs: SequencePair


def coverage_level(seqs: SequencePair, d: int) -> int:
    """Top x-coordinate of the staircase's covering ray on diagonal difference d."""
    if d == 0:
        return 0
    if d > 0:
        if d < seqs.x.first:
            return 0
        return -seqs.x.bracket(d)
    delta = -d
    if delta < seqs.y.first:
        return -delta
    return -seqs.y.bracket(delta) - delta


def staircase_member(st: Staircase, x: Element) -> bool:
    if is_zero(x):
        return False
    return x[0] <= coverage_level(st.seqs, x[0] - x[1])


def covering_apex(seqs: SequencePair, d: int) -> Pair:
    lv = coverage_level(seqs, d)
    return (lv, lv - d)


def upset_minus_staircase(st: Staircase, u: UpSet) -> list[Pair]:
    """The finite part of a ray left outside the staircase, in increasing x.

    Empty exactly when the apex itself lies inside (the covering ray is a
    full tail, so it swallows everything below the apex too).
    """
    a, b = u.apex
    lv = coverage_level(st.seqs, a - b)
    return [(x, x - (a - b)) for x in range(lv + 1, a + 1)]


def _a0_apexes(seqs: SequencePair) -> Iterator[Pair]:
    yield (0, 0)
    for i in range(1, seqs.x.first):
        yield (0, -i)
    for j in range(1, seqs.y.first):
        yield (-j, 0)


def apexes_with_x_at_least(seqs: SequencePair, a: int) -> list[Pair]:
    """Covering-ray apexes whose first coordinate is >= a (finitely many)."""
    out = [p for p in _a0_apexes(seqs) if p[0] >= a]
    n = 1
    while -n >= a:
        for i in range(seqs.x.value(n), seqs.x.value(n + 1)):
            out.append((-n, -n - i))
        n += 1
    n = 1
    while -n - seqs.y.value(n) >= a:
        j_hi = min(seqs.y.value(n + 1) - 1, -a - n)
        for j in range(seqs.y.value(n), j_hi + 1):
            out.append((-n - j, -n))
        n += 1
    return out


def apexes_with_y_at_least(seqs: SequencePair, b: int) -> list[Pair]:
    """Covering-ray apexes whose second coordinate is >= b (finitely many)."""
    out = [p for p in _a0_apexes(seqs) if p[1] >= b]
    n = 1
    while -n - seqs.x.value(n) >= b:
        i_hi = min(seqs.x.value(n + 1) - 1, -b - n)
        for i in range(seqs.x.value(n), i_hi + 1):
            out.append((-n, -n - i))
        n += 1
    n = 1
    while -n >= b:
        for j in range(seqs.y.value(n), seqs.y.value(n + 1)):
            out.append((-n - j, -n))
        n += 1
    return out


def staircase_apexes_in_halfplane(st: Staircase, q: QuadrantSet) -> list[UpSet]:
    """The finitely many staircase components whose trace on the half-plane is
    non-empty, sorted by descending apex."""
    if isinstance(q, RightHalf):
        apexes = apexes_with_x_at_least(st.seqs, q.a)
    elif isinstance(q, UpperHalf):
        apexes = apexes_with_y_at_least(st.seqs, q.b)
    else:
        raise DomainError("component enumeration is defined for half-planes only")
    apexes = sorted(set(apexes), key=lambda p: (-p[0], -p[1]))
    return [UpSet(p) for p in apexes]
