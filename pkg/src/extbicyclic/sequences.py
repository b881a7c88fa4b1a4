"""Eventually-affine encodings of the growth-sequence pairs that parameterize
the locally compact shift-continuous topologies.

A sequence is a finite prefix followed by a constant-step affine tail:
``s_n = prefix[n-1]`` for ``n <= len(prefix)`` and
``s_n = prefix[-1] + (n - len(prefix)) * step`` beyond.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DomainError


class SequenceError(DomainError):
    """A growth-sequence constraint was violated."""


@dataclass(frozen=True)
class AffineSeq:
    prefix: tuple[int, ...]
    step: int

    def value(self, n: int) -> int:
        """1-based term."""
        if n < 1:
            raise DomainError(f"sequence index must be >= 1, got {n}")
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        return self.prefix[-1] + (n - len(self.prefix)) * self.step

    @property
    def first(self) -> int:
        return self.prefix[0]

    def bracket(self, d: int) -> int:
        """The unique n >= 1 with value(n) <= d < value(n+1); requires d >= first."""
        if d < self.first:
            raise DomainError(f"{d} lies below the first term {self.first}")
        for n in range(1, len(self.prefix)):
            if d < self.prefix[n]:
                return n
        last = self.prefix[-1]
        if d < last + self.step:
            return len(self.prefix)
        return len(self.prefix) + (d - last) // self.step


def _validate(role: str, prefix: tuple[int, ...], step: int) -> None:
    if not prefix:
        raise SequenceError(f"{role} prefix must be non-empty")
    if any(not isinstance(v, int) or v < 1 for v in prefix):
        raise SequenceError(f"{role} prefix entries must be positive integers")
    if prefix[0] <= 1:
        raise SequenceError(f"{role}_1>1 violated")
    for n in range(1, len(prefix)):
        if not prefix[n - 1] + 1 < prefix[n]:
            raise SequenceError(f"{role}_n+1<{role}_{{n+1}} violated at n={n}")
    if role == "y":
        for n, v in enumerate(prefix, start=1):
            if not 2 < v + 1:
                raise SequenceError(f"2<y_n+1 violated at n={n}")
    if step < 2:
        raise SequenceError(f"tail_step>=2 violated for {role}")


@dataclass(frozen=True)
class SequencePair:
    """A validated pair of growth sequences (one for each diagonal direction)."""

    x: AffineSeq
    y: AffineSeq

    def __post_init__(self):
        _validate("x", self.x.prefix, self.x.step)
        _validate("y", self.y.prefix, self.y.step)


def make_pair(x_prefix, x_step: int, y_prefix, y_step: int) -> SequencePair:
    return SequencePair(
        AffineSeq(tuple(x_prefix), x_step),
        AffineSeq(tuple(y_prefix), y_step),
    )
