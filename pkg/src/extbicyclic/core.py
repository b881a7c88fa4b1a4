"""Exact arithmetic on the extended bicyclic semigroup with adjoined zero.

Elements are plain ``(a, b)`` integer tuples (unbounded precision) plus the
absorbing zero sentinel ``ZERO``.  Everything here is a pure function on
immutable values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union


class DomainError(ValueError):
    """A precondition of an operation was violated."""


class ParseError(ValueError):
    """A textual input could not be parsed."""


class _Zero:
    """The adjoined absorbing zero (shared by the pair semigroup and the
    non-negative word monoid)."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "0"


ZERO = _Zero()

Pair = tuple[int, int]
Element = Union[_Zero, Pair]


def is_zero(x: Element) -> bool:
    return x is ZERO or isinstance(x, _Zero)


def multiply(x: Element, y: Element) -> Element:
    """Semigroup product; zero is absorbing."""
    if is_zero(x) or is_zero(y):
        return ZERO
    a, b = x
    c, d = y
    if b < c:
        return (a - b + c, d)
    if b == c:
        return (a, d)
    return (a, d + b - c)


def invert(x: Element) -> Element:
    """The unique inverse: zero is self-inverse, pairs swap coordinates."""
    if is_zero(x):
        return ZERO
    a, b = x
    return (b, a)


def is_idempotent(x: Element) -> bool:
    return is_zero(x) or x[0] == x[1]


def leq(x: Element, y: Element) -> bool:
    """Natural partial order: ``x ≼ y`` iff ``x == (x·x⁻¹)·y``.

    On pairs this is the coordinate form: equal difference and y's first
    coordinate below x's.  Zero is below everything.
    """
    if is_zero(x):
        return True
    if is_zero(y):
        return False
    a, b = x
    c, d = y
    return a - b == c - d and c <= a


def corner_contains(n: int, x: Element) -> bool:
    """Membership in the corner subsemigroup (both coordinates >= n, plus zero)."""
    if is_zero(x):
        return True
    return x[0] >= n and x[1] >= n


@dataclass(frozen=True)
class Word:
    """Normal form q^i p^j of the bicyclic monoid; exponents non-negative."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise DomainError(f"word exponents must be non-negative, got ({self.i},{self.j})")


BicyclicWord = Union[_Zero, Word]


def to_bicyclic(n: int, x: Element) -> BicyclicWord:
    """Corner isomorphism onto the bicyclic monoid: (a,b) -> q^(a-n) p^(b-n), zero -> zero."""
    if is_zero(x):
        return ZERO
    if not corner_contains(n, x):
        raise DomainError(f"{format_element(x)} lies outside the corner at {n}")
    a, b = x
    return Word(a - n, b - n)


def bicyclic_multiply(u: BicyclicWord, v: BicyclicWord) -> BicyclicWord:
    """Normal-form product in the bicyclic monoid with zero (pq = 1)."""
    if is_zero(u) or is_zero(v):
        return ZERO
    i, j = u.i, u.j
    k, l = v.i, v.j
    if j < k:
        return Word(i - j + k, l)
    if j == k:
        return Word(i, l)
    return Word(i, l + j - k)


def shift_automorphism(k: int, x: Element) -> Element:
    """The automorphism shifting both coordinates by k (zero fixed)."""
    if is_zero(x):
        return ZERO
    return (x[0] + k, x[1] + k)


def difference_hom(x: Element) -> int:
    """Coordinate difference a-b: the homomorphism onto the integers.

    Undefined at zero (the group congruence lives on the zero-free part).
    """
    if is_zero(x):
        raise DomainError("difference is undefined at zero")
    return x[0] - x[1]


def quotient_mod(m: int, x: Element) -> int:
    """Coordinate difference reduced mod m: the homomorphism onto Z_m."""
    if m <= 0:
        raise DomainError(f"modulus must be positive, got {m}")
    return difference_hom(x) % m


_PAIR_RE = re.compile(r"^\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)$")


def parse_element(text: str) -> Element:
    """Parse the element literal grammar: ``0`` or ``(a,b)`` with signed decimals."""
    s = text.strip().replace("−", "-")
    if s == "0":
        return ZERO
    m = _PAIR_RE.match(s)
    if not m:
        raise ParseError(f"not an element literal: {text!r}")
    return (int(m.group(1)), int(m.group(2)))


def format_element(x: Element) -> str:
    if is_zero(x):
        return "0"
    return f"({x[0]},{x[1]})"


def format_word(w: BicyclicWord) -> str:
    if is_zero(w):
        return "0"
    if w.i == 0 and w.j == 0:
        return "1"
    parts = []
    if w.i:
        parts.append(f"q^{w.i}")
    if w.j:
        parts.append(f"p^{w.j}")
    return " ".join(parts)
