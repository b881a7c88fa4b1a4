"""Oracle/symbolic agreement suite: every symbolic operation is replayed
against the literal brute-force engine on a bounded window and reported as a
named pass/fail property."""

from __future__ import annotations

import random
from typing import Callable

from . import _kernels
from .core import (
    ZERO,
    bicyclic_multiply,
    corner_contains,
    difference_hom,
    invert,
    is_idempotent,
    is_zero,
    leq,
    multiply,
    quotient_mod,
    to_bicyclic,
)
from .continuity import (
    check_translate_inclusion,
    min_i_complement_check,
    shift_witness,
    solution_contains,
    solve_left,
    solve_right,
    translate,
)
from .oracle import (
    Window,
    assoc_violations_window,
    brute_member,
    brute_set,
    brute_solutions,
    enumerate_window,
    region_mask,
    window_pairs,
)
from .sequences import make_pair
from .sets import (
    RightHalf,
    Staircase,
    UpperHalf,
    UpSet,
    staircase_member,
    upset_member,
    upset_minus_staircase,
    upset_trace,
)
from .topology import (
    LcShift,
    MinInverse,
    MinShift,
    basic_nbhd,
    corner_tail,
    excluding_nbhd,
    nbhd_difference,
    nbhd_member,
)

DEFAULT_SEQS = make_pair([2], 2, [3], 2)


def _pairs(w: int):
    return [(x, y) for x in range(-w, w + 1) for y in range(-w, w + 1)]


def check_associativity(w: int) -> tuple[bool, str]:
    win = Window(min(w, 4))
    bad = assoc_violations_window(win)
    elems = [ZERO, (0, 0), (w, -w), (-1, 2)]
    for x in elems:
        for y in elems:
            for z in elems:
                if multiply(multiply(x, y), z) != multiply(x, multiply(y, z)):
                    bad += 1
    return bad == 0, f"window {win.w}, {bad} violations"


def check_kernel_parity(w: int) -> tuple[bool, str]:
    import numpy as np

    X, Y = window_pairs(Window(w))
    CX, CY = _kernels.pair_mul(X[:, None], Y[:, None], X[None, :], Y[None, :])
    n = len(X)
    for i in range(n):
        for j in range(n):
            p = multiply((int(X[i]), int(Y[i])), (int(X[j]), int(Y[j])))
            if p != (int(CX[i, j]), int(CY[i, j])):
                return False, f"kernel disagrees with exact product at {(i, j)}"
    names = sorted(_kernels.backends())
    if len(names) > 1:
        impls = _kernels.backends()
        m0 = impls[names[0]]["ray_union_mask"](X, Y, np.array([1, -2]), np.array([0, 3]))
        m1 = impls[names[1]]["ray_union_mask"](X, Y, np.array([1, -2]), np.array([0, 3]))
        if not np.array_equal(m0, m1):
            return False, "backends disagree on ray masks"
    return True, f"{n * n} products, backend {_kernels.backend()}"


def check_inverse_axioms(w: int) -> tuple[bool, str]:
    elems = enumerate_window(Window(w))
    for x in elems:
        if multiply(multiply(x, invert(x)), x) != x:
            return False, f"xx⁻¹x failed at {x}"
        if multiply(multiply(invert(x), x), invert(x)) != invert(x):
            return False, f"x⁻¹xx⁻¹ failed at {x}"
    for x in elems:
        others = [
            v
            for v in elems
            if multiply(multiply(x, v), x) == x and multiply(multiply(v, x), v) == v
        ]
        if others != [invert(x)]:
            return False, f"inverse not unique at {x}: {others}"
    return True, f"window {w}"


def check_idempotents(w: int) -> tuple[bool, str]:
    elems = enumerate_window(Window(w))
    idems = [e for e in elems if is_idempotent(e)]
    expected = {ZERO} | {(a, a) for a in range(-w, w + 1)}
    if set(map(str, idems)) != set(map(str, expected)):
        return False, "idempotent classification differs"
    for e in idems:
        for f in idems:
            if multiply(e, f) != multiply(f, e):
                return False, f"idempotents {e},{f} do not commute"
    return True, f"{len(idems)} idempotents"


def check_order(w: int) -> tuple[bool, str]:
    elems = enumerate_window(Window(w))
    for x in elems:
        for y in elems:
            if leq(x, y) != (x == multiply(multiply(x, invert(x)), y)):
                return False, f"order mismatch at {x},{y}"
    return True, f"window {w}"


def check_corner_iso(w: int) -> tuple[bool, str]:
    for n in (-3, 0, 2):
        corner = [e for e in enumerate_window(Window(w)) if corner_contains(n, e)]
        words = [to_bicyclic(n, e) for e in corner]
        if len(set(map(str, words))) != len(words):
            return False, f"corner map not injective at n={n}"
        for u in corner:
            for v in corner:
                if to_bicyclic(n, multiply(u, v)) != bicyclic_multiply(
                    to_bicyclic(n, u), to_bicyclic(n, v)
                ):
                    return False, f"corner map not multiplicative at n={n}, {u},{v}"
    return True, "n in {-3, 0, 2}"


def check_homomorphisms(w: int) -> tuple[bool, str]:
    pairs = _pairs(w)
    for x in pairs:
        for y in pairs:
            if difference_hom(multiply(x, y)) != difference_hom(x) + difference_hom(y):
                return False, f"difference not additive at {x},{y}"
    for m in (1, 2, 3, 5):
        for x in pairs[:: max(1, len(pairs) // 40)]:
            for y in pairs[:: max(1, len(pairs) // 40)]:
                if quotient_mod(m, multiply(x, y)) != (
                    quotient_mod(m, x) + quotient_mod(m, y)
                ) % m:
                    return False, f"mod-{m} map not multiplicative at {x},{y}"
    return True, f"window {w}, moduli 1,2,3,5"


def check_solvers(w: int) -> tuple[bool, str]:
    win = Window(w)
    elems = enumerate_window(win)
    pairs = _pairs(min(w, 3))
    for fixed in pairs:
        for target in pairs:
            sol_r = solve_right(fixed, target)
            want = brute_solutions(win, "right", fixed, target)
            got = [e for e in elems if solution_contains(sol_r, e)]
            if got != want:
                return False, f"right solver differs at {fixed},{target}"
            sol_l = solve_left(fixed, target)
            want = brute_solutions(win, "left", fixed, target)
            got = [e for e in elems if solution_contains(sol_l, e)]
            if got != want:
                return False, f"left solver differs at {fixed},{target}"
    return True, f"all pairs in window {min(w, 3)}"


def check_staircase(w: int, seqs) -> tuple[bool, str]:
    st = Staircase(seqs)
    for p in enumerate_window(Window(w)):
        if staircase_member(st, p) != brute_member(st, p):
            return False, f"staircase membership differs at {p}"
    return True, f"window {w}"


def check_upset_minus(w: int, seqs) -> tuple[bool, str]:
    st = Staircase(seqs)
    for apex in _pairs(min(w, 5)):
        got = upset_minus_staircase(st, UpSet(apex))
        bound = max([w] + [abs(c) for p in got for c in p]) + 3
        want = [
            p
            for p in brute_set(Window(bound), UpSet(apex))
            if not brute_member(st, p)
        ]
        if sorted(got) != sorted(want):
            return False, f"ray difference differs at apex {apex}"
    return True, f"apexes in window {min(w, 5)}"


def check_traces(w: int) -> tuple[bool, str]:
    for apex in _pairs(min(w, 4)):
        for q in (RightHalf(-2), RightHalf(1), UpperHalf(0), UpperHalf(3)):
            seg = upset_trace(UpSet(apex), q)
            win = Window(abs(apex[0]) + abs(apex[1]) + 8)
            want = [
                p
                for p in brute_set(win, UpSet(apex))
                if not is_zero(p) and brute_member(q, p)
            ]
            if seg.points() != want:
                return False, f"trace differs at {apex}, {q}"
    return True, "half-planes at -2, 1, 0, 3"


def check_nbhd_membership(w: int, seqs) -> tuple[bool, str]:
    descs = [
        basic_nbhd(MinShift(), apexes=((1, 1), (0, 3))),
        basic_nbhd(LcShift(seqs), apexes=((1, 1),)),
        basic_nbhd(LcShift(seqs), apexes=((2, -1), (-1, 2))),
        basic_nbhd(MinInverse(), thresholds=(-1, 2)),
    ]
    for U in descs:
        for p in enumerate_window(Window(w)):
            if nbhd_member(U, p) != brute_member(U, p):
                return False, f"membership differs at {p} in {U}"
        if not nbhd_member(U, ZERO):
            return False, f"zero missing from {U}"
    return True, f"{len(descs)} descriptors, window {w}"


def check_monotone(w: int, seqs) -> tuple[bool, str]:
    rng = random.Random(7)
    for _ in range(10):
        base = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(2)]
        extra = base + [(rng.randint(-3, 3), rng.randint(-3, 3))]
        for spec in (MinShift(), LcShift(seqs)):
            U = basic_nbhd(spec, apexes=tuple(base))
            V = basic_nbhd(spec, apexes=tuple(extra))
            for p in enumerate_window(Window(w)):
                if nbhd_member(V, p) and not nbhd_member(U, p):
                    return False, f"adding an apex added member {p}"
    return True, "10 seeded descriptor pairs"


def check_nbhd_difference(w: int, seqs) -> tuple[bool, str]:
    spec = LcShift(seqs)
    rng = random.Random(11)
    for _ in range(10):
        base = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(2)]
        extra = base + [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(2)]
        U = basic_nbhd(spec, apexes=tuple(base))
        V = basic_nbhd(spec, apexes=tuple(extra))
        got = nbhd_difference(U, V)
        bound = max([6] + [abs(c) for p in got for c in p]) + 3
        want = [
            p
            for p in enumerate_window(Window(bound))
            if brute_member(U, p) and not brute_member(V, p) and not is_zero(p)
        ]
        if got != want:
            return False, f"difference differs for {base} vs {extra}"
    return True, "10 seeded nested pairs"


def check_corner_tail(w: int, seqs) -> tuple[bool, str]:
    spec = LcShift(seqs)
    rng = random.Random(13)
    for _ in range(8):
        apexes = tuple((rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(2))
        U = basic_nbhd(spec, apexes=apexes)
        for n in range(-3, 4):
            got = corner_tail(U, n)
            bound = max([abs(n) + 2, 8] + [abs(c) for p in got for c in p]) + 3
            want = [
                p
                for p in enumerate_window(Window(bound))
                if not is_zero(p)
                and corner_contains(n, p)
                and not brute_member(U, p)
            ]
            if got != sorted(want):
                return False, f"corner tail differs at n={n}, apexes {apexes}"
    return True, "8 seeded descriptors, n in [-3, 3]"


def check_hausdorff_proxy(w: int, seqs) -> tuple[bool, str]:
    for spec in (MinShift(), LcShift(seqs), MinInverse()):
        for p in _pairs(min(w, 4)):
            U = excluding_nbhd(spec, p)
            if nbhd_member(U, p) or not nbhd_member(U, ZERO):
                return False, f"cannot separate zero from {p} in {spec}"
    return True, "all three families"


def check_witnesses(w: int, seqs) -> tuple[bool, str]:
    for spec in (MinShift(), LcShift(seqs)):
        for element in ((0, 0), (1, -2), (-2, 1), (2, 2)):
            for apexes in (((1, 1),), ((0, 2), (-1, -1))):
                U = basic_nbhd(spec, apexes=apexes)
                for side in ("left", "right"):
                    wit = shift_witness(spec, element, side, U)
                    bad = check_translate_inclusion(element, side, wit.V, U, 2 * w)
                    if bad is not None:
                        return False, f"translate escaped at {bad} ({spec}, {element}, {side})"
    return True, f"verified on window {2 * w}"


def check_translate_images(w: int) -> tuple[bool, str]:
    win = Window(w)
    for a, b in ((0, 0), (2, -1), (-1, 3)):
        for p in enumerate_window(win):
            img = multiply(p, (a, b))
            if not is_zero(img) and img[1] < b:
                return False, f"right translate image left the upper half-plane at {p}"
            img = multiply((a, b), p)
            if not is_zero(img) and img[0] < a:
                return False, f"left translate image left the right half-plane at {p}"
        for x in range(-w // 2, w // 2 + 1):
            for y in range(b, b + w // 2):
                if not brute_solutions(
                    Window(w + abs(x) + abs(y) + abs(a) + abs(b)), "right", (a, b), (x, y)
                ):
                    return False, f"right image misses {(x, y)}"
    return True, f"window {w}"


def check_min_i_identity(w: int) -> tuple[bool, str]:
    for a in range(-2, 3):
        for b in range(-2, 3):
            if not min_i_complement_check(a, b, max(w, abs(a) + abs(b) + 3)):
                return False, f"complement identity failed at ({a},{b})"
    if min_i_complement_check(0, 0, 8, offset=0):
        return False, "perturbed identity unexpectedly holds"
    return True, "thresholds in [-2, 2]^2, perturbation rejected"


def all_checks(window: int, seqs=None) -> list[tuple[str, bool, str]]:
    seqs = seqs or DEFAULT_SEQS
    named: list[tuple[str, Callable[[], tuple[bool, str]]]] = [
        ("associativity", lambda: check_associativity(window)),
        ("kernel-parity", lambda: check_kernel_parity(min(window, 4))),
        ("inverse-axioms", lambda: check_inverse_axioms(window)),
        ("idempotents", lambda: check_idempotents(window)),
        ("natural-order", lambda: check_order(window)),
        ("corner-isomorphism", lambda: check_corner_iso(window)),
        ("homomorphisms", lambda: check_homomorphisms(window)),
        ("translation-solvers", lambda: check_solvers(window)),
        ("staircase-membership", lambda: check_staircase(window + 4, seqs)),
        ("ray-minus-staircase", lambda: check_upset_minus(window, seqs)),
        ("ray-traces", lambda: check_traces(window)),
        ("nbhd-membership", lambda: check_nbhd_membership(window + 2, seqs)),
        ("nbhd-monotonicity", lambda: check_monotone(window, seqs)),
        ("nbhd-difference", lambda: check_nbhd_difference(window, seqs)),
        ("corner-tail", lambda: check_corner_tail(window, seqs)),
        ("hausdorff-proxy", lambda: check_hausdorff_proxy(window, seqs)),
        ("shift-witnesses", lambda: check_witnesses(window, seqs)),
        ("translate-images", lambda: check_translate_images(window)),
        ("quadrant-complement", lambda: check_min_i_identity(window + 3)),
    ]
    results = []
    for name, fn in named:
        try:
            ok, detail = fn()
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append((name, ok, detail))
    return results
