"""Basic neighborhoods of zero for the three topology families, their
comparison at zero, and the finiteness checkers behind local compactness.

Families: the locally compact shift-continuous family (complement of the
staircase and finitely many rays), the minimal shift-continuous topology
(complement of finitely many rays), and the minimal inverse-semigroup
topology (corner quadrants).  All non-zero points are isolated in every
family, so descriptors only ever encode neighborhoods of zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .core import DomainError, Element, Pair, is_zero
from .sequences import AffineSeq, SequencePair
from .sets import (
    Staircase,
    UpSet,
    coverage_level,
    covering_apex,
    staircase_member,
    upset_member,
    upset_minus_staircase,
    apexes_with_x_at_least,
)


@dataclass(frozen=True)
class Discrete:
    pass


@dataclass(frozen=True)
class MinShift:
    pass


@dataclass(frozen=True)
class MinInverse:
    pass


@dataclass(frozen=True)
class LcShift:
    seqs: SequencePair


TopologySpec = Union[Discrete, MinShift, MinInverse, LcShift]


class InfiniteTailError(DomainError):
    """The requested tail set is not finite for this topology kind."""


def _canonical_apexes(spec: TopologySpec, apexes) -> tuple[Pair, ...]:
    """Sorted, deduplicated, with subsumed rays (same diagonal, lower top) and,
    for the locally compact family, rays already inside the staircase removed."""
    best: dict[int, int] = {}
    for a, b in apexes:
        d = a - b
        if d not in best or a > best[d]:
            best[d] = a
    if isinstance(spec, LcShift):
        best = {d: a for d, a in best.items() if a > coverage_level(spec.seqs, d)}
    return tuple(sorted((a, a - d) for d, a in best.items()))


@dataclass(frozen=True)
class NbhdDescriptor:
    """A basic open neighborhood of zero.

    Payload: apex list for the ray-removing families (stored canonically),
    thresholds for the quadrant family, nothing for the discrete one.
    """

    spec: TopologySpec
    apexes: tuple[Pair, ...] = ()
    thresholds: Optional[Pair] = None

    def __post_init__(self):
        if isinstance(self.spec, MinInverse):
            if self.thresholds is None:
                raise DomainError("quadrant neighborhoods need thresholds (a, b)")
            object.__setattr__(self, "apexes", ())
        elif isinstance(self.spec, Discrete):
            object.__setattr__(self, "apexes", ())
            object.__setattr__(self, "thresholds", None)
        else:
            if self.thresholds is not None:
                raise DomainError("thresholds only apply to the quadrant family")
            object.__setattr__(self, "apexes", _canonical_apexes(self.spec, self.apexes))


def basic_nbhd(spec: TopologySpec, apexes=None, thresholds: Optional[Pair] = None) -> NbhdDescriptor:
    return NbhdDescriptor(spec, tuple(apexes) if apexes is not None else (), thresholds)


def nbhd_member(U: NbhdDescriptor, x: Element) -> bool:
    if is_zero(x):
        return True
    spec = U.spec
    if isinstance(spec, Discrete):
        return False
    if isinstance(spec, MinInverse):
        a, b = U.thresholds
        return x[0] >= a and x[1] >= b
    if isinstance(spec, LcShift) and staircase_member(Staircase(spec.seqs), x):
        return False
    return not any(upset_member(UpSet(p), x) for p in U.apexes)


def _ray_covered_by(apexes, p: Pair) -> bool:
    return any(a - b == p[0] - p[1] and p[0] <= a for a, b in apexes)


def nbhd_difference(U: NbhdDescriptor, V: NbhdDescriptor) -> list[Pair]:
    """The exact finite difference U∖V for nested basics of the locally
    compact family over one sequence pair (V removes at least U's rays)."""
    if not (isinstance(U.spec, LcShift) and U.spec == V.spec):
        raise DomainError("difference needs two basics of one locally compact family")
    for p in U.apexes:
        if not _ray_covered_by(V.apexes, p):
            raise DomainError(f"inner neighborhood does not remove the ray at {p}")
    st = Staircase(U.spec.seqs)
    out = set()
    for v in V.apexes:
        for p in upset_minus_staircase(st, UpSet(v)):
            if not _ray_covered_by(U.apexes, p):
                out.add(p)
    return sorted(out)


def corner_tail(U: NbhdDescriptor, n: int) -> list[Pair]:
    """The finite deficiency of U inside the corner at n: all corner points
    the neighborhood misses (they lie in the staircase or a removed ray)."""
    if not isinstance(U.spec, LcShift):
        raise InfiniteTailError("corner tails are finite only for the locally compact family")
    seqs = U.spec.seqs
    out = set()
    comp_apexes = [p for p in apexes_with_x_at_least(seqs, n) if p[1] >= n]
    for a, b in list(U.apexes) + comp_apexes:
        for t in range(0, min(a, b) - n + 1):
            out.add((a - t, b - t))
    return sorted(out)


@dataclass(frozen=True)
class ContainsWitness:
    inner: NbhdDescriptor


@dataclass(frozen=True)
class SeparatedBy:
    point: Pair


@dataclass(frozen=True)
class InconclusiveAtWindow:
    window: int


ComparisonVerdict = Union[ContainsWitness, SeparatedBy, InconclusiveAtWindow]


def _bracket_or_zero(seq: AffineSeq, d: int) -> int:
    return 0 if d < seq.first else seq.bracket(d)


def _tail_index(seq: AffineSeq, d: int) -> int:
    return len(seq.prefix) + (d - seq.prefix[-1]) // seq.step


def _brackets_dominate(seq_a: AffineSeq, seq_b: AffineSeq, beyond: int):
    """Decide whether bracket_a(d) >= bracket_b(d) for every d > beyond.

    Returns (True, None) when certified for the whole tail, else
    (False, d) with an explicit violating difference.  Decidable because both
    brackets are eventually floor-affine: the smaller step dominates
    eventually, equal steps make the gap periodic.
    """
    la, va, sa = len(seq_a.prefix), seq_a.prefix[-1], seq_a.step
    lb, vb, sb = len(seq_b.prefix), seq_b.prefix[-1], seq_b.step
    scan_to = max(beyond, va, vb)
    if sa < sb:
        num = sa * sb * (lb - la + 1) + sb * va - sa * vb
        scan_to = max(scan_to, -(-num // (sb - sa)))
    elif sa == sb:
        scan_to = max(scan_to, va, vb) + sa
    else:
        num = sa * sb * (la - lb + 2) + sa * vb - sb * va
        scan_to = max(scan_to, -(-num // (sa - sb))) + sa
    for d in range(beyond + 1, scan_to + 1):
        if _bracket_or_zero(seq_a, d) < _bracket_or_zero(seq_b, d):
            return False, d
    if sa > sb:
        # divergence guarantees a violation; it must have been inside the scan
        raise AssertionError("bracket divergence bound was too small")
    return True, None


def _lc_vs_lc(probe: NbhdDescriptor, fine: LcShift, window: int) -> ComparisonVerdict:
    coarse: LcShift = probe.spec
    if coarse.seqs == fine.seqs:
        return ContainsWitness(basic_nbhd(fine, apexes=probe.apexes))
    reach = max([2 * window] + [abs(a - b) for a, b in probe.apexes])
    ok_x, viol_x = _brackets_dominate(coarse.seqs.x, fine.seqs.x, reach)
    if not ok_x:
        return SeparatedBy(covering_apex(coarse.seqs, viol_x))
    ok_y, viol_y = _brackets_dominate(coarse.seqs.y, fine.seqs.y, reach)
    if not ok_y:
        return SeparatedBy(covering_apex(coarse.seqs, -viol_y))
    ray_tops = {a - b: a for a, b in probe.apexes}
    patches = list(probe.apexes)
    for d in range(-reach, reach + 1):
        need = max(coverage_level(coarse.seqs, d), ray_tops.get(d, -(10**9)))
        have = max(coverage_level(fine.seqs, d), ray_tops.get(d, -(10**9)))
        if need > have:
            patches.append((need, need - d))
    return ContainsWitness(basic_nbhd(fine, apexes=tuple(patches)))


def compare_at_zero(
    coarse: TopologySpec, fine: TopologySpec, probe: NbhdDescriptor, window: int
) -> ComparisonVerdict:
    """Try to fit a basic neighborhood of the fine family inside the probe.

    Exact witnesses exist whenever the fine family refines the probe's
    removal pattern; otherwise a certified obstruction point (valid against
    every fine basic with parameters bounded by the window) yields
    SeparatedBy, and anything undecided is reported inconclusive at the
    window rather than over-claimed.
    """
    if probe.spec != coarse:
        raise DomainError("probe does not belong to the coarse topology")
    if window < 1:
        raise DomainError("window must be positive")
    if isinstance(fine, Discrete):
        return ContainsWitness(basic_nbhd(fine))
    if isinstance(coarse, Discrete):
        return SeparatedBy((window + 1, window + 1))
    if isinstance(coarse, MinShift):
        if isinstance(fine, LcShift):
            return ContainsWitness(basic_nbhd(fine, apexes=probe.apexes))
        if isinstance(fine, MinShift):
            return ContainsWitness(probe)
        a = 1 + max(p[0] for p in probe.apexes)
        b = 1 + max(p[1] for p in probe.apexes)
        return ContainsWitness(basic_nbhd(fine, thresholds=(a, b)))
    if isinstance(coarse, MinInverse):
        if isinstance(fine, MinInverse):
            return ContainsWitness(basic_nbhd(fine, thresholds=probe.thresholds))
        _, b = probe.thresholds
        return SeparatedBy((window + 1, b - 1))
    # coarse is the locally compact family
    if isinstance(fine, MinInverse):
        a = max(1, 1 + max((p[0] for p in probe.apexes), default=0))
        b = max(1, 1 + max((p[1] for p in probe.apexes), default=0))
        return ContainsWitness(basic_nbhd(fine, thresholds=(a, b)))
    if isinstance(fine, MinShift):
        d = max([2 * window] + [abs(a - b) for a, b in probe.apexes]) + 1
        return SeparatedBy(covering_apex(coarse.seqs, d))
    return _lc_vs_lc(probe, fine, window)


@dataclass(frozen=True)
class NotFound:
    window: int


def distinctness_certificate(
    s1: SequencePair, s2: SequencePair, window: int
) -> Union[Pair, NotFound]:
    """A window point whose staircase membership differs between the two
    encodings (a witness that the corresponding basic neighborhoods differ)."""
    if s1 == s2:
        raise DomainError("sequence pairs are structurally equal")
    st1, st2 = Staircase(s1), Staircase(s2)
    for x in range(-window, window + 1):
        for y in range(-window, window + 1):
            p = (x, y)
            if staircase_member(st1, p) != staircase_member(st2, p):
                return p
    return NotFound(window)


def excluding_nbhd(spec: TopologySpec, p: Pair) -> NbhdDescriptor:
    """A basic neighborhood of zero omitting the given non-zero point
    (the Hausdorff separation witness for zero against p)."""
    if isinstance(spec, Discrete):
        return basic_nbhd(spec)
    if isinstance(spec, MinInverse):
        return basic_nbhd(spec, thresholds=(p[0] + 1, p[1] + 1))
    U = basic_nbhd(spec, apexes=(p,))
    if nbhd_member(U, p):
        raise AssertionError("exclusion witness failed")
    return U
