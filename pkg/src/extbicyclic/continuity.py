"""Translation-equation solvers and constructive continuity witnesses.

Solving ``w·(c,d) = (e,f)`` (or the left-sided mirror) has exactly three
outcomes: no solution, a single solution, or a full up-set of solutions with
a minimal element.  Those minimal solutions are what turn a basic
neighborhood of zero into one whose translate stays inside a given
neighborhood: the shift-witness engine below assembles them from the trace
of the removed region on the relevant half-plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional, Union

from .core import DomainError, Element, Pair, invert, is_zero, multiply
from .sets import (
    RightHalf,
    Staircase,
    UpperHalf,
    UpSet,
    staircase_apexes_in_halfplane,
    upset_member,
)
from .topology import LcShift, MinShift, NbhdDescriptor, basic_nbhd, nbhd_member


@dataclass(frozen=True)
class EmptySolutions:
    pass


@dataclass(frozen=True)
class SingletonSolution:
    element: Pair


@dataclass(frozen=True)
class UpSetSolutions:
    upset: UpSet


SolutionSet = Union[EmptySolutions, SingletonSolution, UpSetSolutions]

Side = Literal["left", "right"]


def solve_right(right_factor: Pair, target: Pair) -> SolutionSet:
    """All w with w·right_factor = target."""
    c, d = right_factor
    e, f = target
    if f < d:
        return EmptySolutions()
    if f == d:
        return UpSetSolutions(UpSet((e, c)))
    return SingletonSolution((e, c + f - d))


def solve_left(left_factor: Pair, target: Pair) -> SolutionSet:
    """All w with left_factor·w = target, via the inversion anti-isomorphism."""
    a, b = left_factor
    e, f = target
    mirror = solve_right((b, a), (f, e))
    if isinstance(mirror, EmptySolutions):
        return mirror
    if isinstance(mirror, SingletonSolution):
        return SingletonSolution(invert(mirror.element))
    return UpSetSolutions(UpSet(invert(mirror.upset.apex)))


def solution_contains(sol: SolutionSet, w: Element) -> bool:
    if isinstance(sol, EmptySolutions):
        return False
    if isinstance(sol, SingletonSolution):
        return not is_zero(w) and tuple(w) == sol.element
    return upset_member(sol.upset, w)


def minimal_solution(sol: SolutionSet) -> Optional[Pair]:
    if isinstance(sol, SingletonSolution):
        return sol.element
    if isinstance(sol, UpSetSolutions):
        return sol.upset.apex
    return None


def translate(element: Pair, v: Element, side: Side) -> Element:
    return multiply(element, v) if side == "left" else multiply(v, element)


@dataclass(frozen=True)
class ShiftWitness:
    element: Pair
    side: Side
    U: NbhdDescriptor
    V: NbhdDescriptor
    trace_apexes: tuple[Pair, ...]
    verified_window: Optional[int] = None


def _trace_apexes(spec, element: Pair, side: Side, U: NbhdDescriptor) -> list[Pair]:
    """Apexes of every removed ray whose trace on the element's image
    half-plane is non-empty: staircase components first, then listed rays."""
    a, b = element
    if side == "left":
        half, keep = RightHalf(a), lambda p: p[0] >= a
    else:
        half, keep = UpperHalf(b), lambda p: p[1] >= b
    out: list[Pair] = []
    if isinstance(spec, LcShift):
        out.extend(u.apex for u in staircase_apexes_in_halfplane(Staircase(spec.seqs), half))
    for p in sorted(U.apexes, key=lambda p: (-p[0], -p[1])):
        if keep(p) and p not in out:
            out.append(p)
    return out


def shift_witness(
    spec,
    element: Pair,
    side: Side,
    U: NbhdDescriptor,
    verify_window: Optional[int] = None,
) -> ShiftWitness:
    """A basic neighborhood V with translate(element, V, side) ⊆ U.

    V removes, for each removed ray meeting the image half-plane, the minimal
    solution of the corresponding translation equation; when nothing removed
    meets the half-plane the translate lands inside U for free and a default
    apex keeps V a legal basic set.
    """
    if not isinstance(spec, (LcShift, MinShift)):
        raise DomainError("shift witnesses exist for the ray-removing families only")
    if U.spec != spec:
        raise DomainError("neighborhood does not belong to the topology")
    if side not in ("left", "right"):
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    a, b = element
    traces = _trace_apexes(spec, element, side, U)
    mins: list[Pair] = []
    for t in traces:
        sol = solve_left(element, t) if side == "left" else solve_right(element, t)
        m = minimal_solution(sol)
        if m is not None:
            mins.append(m)
    if not mins:
        mins = [(b, b) if side == "left" else (a, a)]
    V = basic_nbhd(spec, apexes=tuple(mins))
    verified = None
    if verify_window is not None:
        bad = check_translate_inclusion(element, side, V, U, verify_window)
        if bad is not None:
            raise AssertionError(f"witness verification failed at {bad}")
        verified = verify_window
    return ShiftWitness(element, side, U, V, tuple(traces), verified)


def check_translate_inclusion(
    element: Pair, side: Side, V: NbhdDescriptor, U: NbhdDescriptor, window: int
) -> Optional[Element]:
    """First window member of V whose translate escapes U, or None."""
    for x in range(-window, window + 1):
        for y in range(-window, window + 1):
            v = (x, y)
            if nbhd_member(V, v) and not nbhd_member(U, translate(element, v, side)):
                return v
    return None


def inversion_image(U: NbhdDescriptor) -> NbhdDescriptor:
    """The pointwise inverse of a basic neighborhood, when it is again basic:
    apexes swap.  Requires an inversion-symmetric removed region, i.e. the
    minimal shift-continuous family or a locally compact one with equal
    sequences."""
    spec = U.spec
    if isinstance(spec, LcShift):
        if spec.seqs.x != spec.seqs.y:
            raise DomainError("staircase is not inversion-symmetric unless the sequences agree")
    elif not isinstance(spec, MinShift):
        raise DomainError("inversion images are formed for the ray-removing families only")
    return basic_nbhd(spec, apexes=tuple((b, a) for a, b in U.apexes))


def min_i_complement_counterexample(
    a: int, b: int, window: int, offset: int = -1
) -> Optional[Pair]:
    """First window pair violating the quadrant-complement identity: a point
    is outside the quadrant at (a,b) iff its left idempotent sits above
    (a+offset, a+offset) or its right idempotent above (b+offset, b+offset).
    The true identity has offset -1; other offsets are perturbations."""
    if window <= max(abs(a), abs(b)) + 2:
        raise DomainError("window too small to see the quadrant boundary")
    left_ray = UpSet((a + offset, a + offset))
    right_ray = UpSet((b + offset, b + offset))
    for x in range(-window, window + 1):
        for y in range(-window, window + 1):
            p = (x, y)
            outside = not (x >= a and y >= b)
            claimed = upset_member(left_ray, multiply(p, invert(p))) or upset_member(
                right_ray, multiply(invert(p), p)
            )
            if outside != claimed:
                return p
    return None


def min_i_complement_check(a: int, b: int, window: int, offset: int = -1) -> bool:
    return min_i_complement_counterexample(a, b, window, offset) is None
