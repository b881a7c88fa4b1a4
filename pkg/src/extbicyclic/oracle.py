"""Independent brute-force engine over finite coordinate windows.

Ground truth for every symbolic operation: membership is evaluated literally
from the defining displays, point by point, with a component enumeration and
product formula deliberately duplicated from (not shared with) the symbolic
modules.  The numpy/numba kernels provide the same answers vectorized; the
pure-Python path here is the reference they are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

from . import _kernels
from .core import Element, Pair, ZERO, is_zero, multiply
from .sequences import SequencePair
from .sets import Corner, DiagonalSegment, RightHalf, Staircase, UpperHalf, UpSet
from .topology import Discrete, LcShift, MinInverse, MinShift, NbhdDescriptor


@dataclass(frozen=True)
class Window:
    """All pairs with both coordinates in [-w, w], plus zero: (2w+1)^2 + 1 points."""

    w: int

    def __post_init__(self):
        if self.w < 0:
            raise ValueError("window size must be non-negative")


def enumerate_window(win: Window) -> list[Element]:
    """Zero first, then pairs in lexicographic order."""
    out: list[Element] = [ZERO]
    for x in range(-win.w, win.w + 1):
        for y in range(-win.w, win.w + 1):
            out.append((x, y))
    return out


def window_pairs(win: Window) -> tuple[np.ndarray, np.ndarray]:
    """Coordinates of the window's non-zero points, enumeration order."""
    r = np.arange(-win.w, win.w + 1, dtype=np.int64)
    X, Y = np.meshgrid(r, r, indexing="ij")
    return X.ravel(), Y.ravel()


def staircase_apexes(seqs: SequencePair, min_x: int) -> Iterator[Pair]:
    """Literal enumeration of the removed-region component apexes with first
    coordinate >= min_x, straight from the defining unions.

    Iteration stops once a family's apexes sink below min_x for good:
    the diagonal family at n > -min_x (apex first coordinate -n), the
    lateral family once -n - y_n < min_x (its apexes only sink further).
    """
    x_seq, y_seq = seqs.x, seqs.y
    if 0 >= min_x:
        yield (0, 0)
        for i in range(1, x_seq.first):
            yield (0, -i)
    for j in range(1, y_seq.first):
        if -j >= min_x:
            yield (-j, 0)
    n = 1
    while -n >= min_x:
        for i in range(x_seq.value(n), x_seq.value(n + 1)):
            yield (-n, -n - i)
        n += 1
    n = 1
    while -n - y_seq.value(n) >= min_x:
        for j in range(y_seq.value(n), y_seq.value(n + 1)):
            if -n - j >= min_x:
                yield (-n - j, -n)
        n += 1


def _in_ray(apex: Pair, p: Pair) -> bool:
    return apex[0] - apex[1] == p[0] - p[1] and p[0] <= apex[0]


def brute_member(obj, p: Element) -> bool:
    """Literal pointwise membership for any descriptor kind."""
    if isinstance(obj, UpSet):
        return not is_zero(p) and _in_ray(obj.apex, p)
    if isinstance(obj, (RightHalf, UpperHalf, Corner)):
        if is_zero(p):
            return True
        if isinstance(obj, RightHalf):
            return p[0] >= obj.a
        if isinstance(obj, UpperHalf):
            return p[1] >= obj.b
        return p[0] >= obj.a and p[1] >= obj.b
    if isinstance(obj, DiagonalSegment):
        return (
            not is_zero(p)
            and p[0] - p[1] == obj.diff
            and obj.x_lo <= p[0] <= obj.x_hi
        )
    if isinstance(obj, Staircase):
        if is_zero(p):
            return False
        return any(_in_ray(apex, p) for apex in staircase_apexes(obj.seqs, p[0]))
    if isinstance(obj, NbhdDescriptor):
        if is_zero(p):
            return True
        spec = obj.spec
        if isinstance(spec, Discrete):
            return False
        if isinstance(spec, MinInverse):
            a, b = obj.thresholds
            return p[0] >= a and p[1] >= b
        if isinstance(spec, LcShift) and brute_member(Staircase(spec.seqs), p):
            return False
        return not any(_in_ray(apex, p) for apex in obj.apexes)
    raise TypeError(f"no brute-force evaluation for {type(obj).__name__}")


def brute_set(win: Window, obj) -> list[Element]:
    return [p for p in enumerate_window(win) if brute_member(obj, p)]


def brute_solutions(win: Window, side: str, fixed: Pair, target: Pair) -> list[Element]:
    """All window elements solving the one-sided translation equation."""
    if side == "right":
        return [w for w in enumerate_window(win) if multiply(w, fixed) == target]
    if side == "left":
        return [w for w in enumerate_window(win) if multiply(fixed, w) == target]
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _guard(*arrays) -> None:
    for a in arrays:
        if a.size and int(np.abs(a).max()) >= _kernels.MAX_COORD:
            raise OverflowError("coordinates too large for the vectorized path")


def region_mask(obj, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """Vectorized brute membership on arbitrary pair coordinates."""
    X = np.asarray(X, dtype=np.int64)
    Y = np.asarray(Y, dtype=np.int64)
    _guard(X, Y)
    if isinstance(obj, UpSet):
        ax, ay = obj.apex
        return _kernels.ray_union_mask(X, Y, np.array([ax]), np.array([ay]))
    if isinstance(obj, RightHalf):
        return X >= obj.a
    if isinstance(obj, UpperHalf):
        return Y >= obj.b
    if isinstance(obj, Corner):
        return (X >= obj.a) & (Y >= obj.b)
    if isinstance(obj, Staircase):
        min_x = int(X.min()) if X.size else 0
        apexes = list(staircase_apexes(obj.seqs, min_x))
        ax = np.array([p[0] for p in apexes], dtype=np.int64)
        ay = np.array([p[1] for p in apexes], dtype=np.int64)
        return _kernels.ray_union_mask(X, Y, ax, ay)
    if isinstance(obj, NbhdDescriptor):
        spec = obj.spec
        if isinstance(spec, Discrete):
            return np.zeros(X.shape, dtype=bool)
        if isinstance(spec, MinInverse):
            a, b = obj.thresholds
            return (X >= a) & (Y >= b)
        ax = np.array([p[0] for p in obj.apexes], dtype=np.int64)
        ay = np.array([p[1] for p in obj.apexes], dtype=np.int64)
        out = ~_kernels.ray_union_mask(X, Y, ax, ay)
        if isinstance(spec, LcShift):
            out &= ~region_mask(Staircase(spec.seqs), X, Y)
        return out
    raise TypeError(f"no vectorized evaluation for {type(obj).__name__}")


def translate_violations(
    element: Pair, side: str, V: NbhdDescriptor, U: NbhdDescriptor, window: int
) -> list[Pair]:
    """Window members of V whose translate by the element escapes U (vectorized;
    the zero member translates to zero, which every neighborhood contains)."""
    X, Y = window_pairs(Window(window))
    a = np.int64(element[0])
    b = np.int64(element[1])
    if side == "left":
        PX, PY = _kernels.pair_mul(a, b, X, Y)
    else:
        PX, PY = _kernels.pair_mul(X, Y, a, b)
    bad = region_mask(V, X, Y) & ~region_mask(U, PX, PY)
    return [(int(x), int(y)) for x, y in zip(X[bad], Y[bad])]


def assoc_violations_window(win: Window) -> int:
    """Number of non-associative pair triples in the window (zero triples are
    trivially associative and excluded)."""
    X, Y = window_pairs(win)
    return _kernels.assoc_violations(X, Y)
