"""Hot window-sweep kernels for the brute-force oracle.

Two interchangeable backends: numba ``@njit`` loops and a pure-numpy
fallback.  The numpy path is selected when ``EXTBICYCLIC_NO_NUMBA`` is set
(or numba is unavailable).  Both operate on bounded int64 coordinates only;
callers guard magnitudes.  The three-case product formula is deliberately
re-implemented here so the oracle does not share case-analysis code with the
symbolic modules.
"""

from __future__ import annotations

import os

import numpy as np

MAX_COORD = 2**31  # coordinates beyond this must stay on the exact Python path


def _np_pair_mul(ax, ay, bx, by):
    ax, ay, bx, by = np.broadcast_arrays(ax, ay, bx, by)
    cx = np.where(ay < bx, ax - ay + bx, ax)
    cy = np.where(ay > bx, by + ay - bx, by)
    return cx, cy


def _np_ray_union_mask(X, Y, AX, AY):
    out = np.zeros(np.shape(X), dtype=bool)
    D = X - Y
    for i in range(len(AX)):
        out |= (D == AX[i] - AY[i]) & (X <= AX[i])
    return out


def _np_assoc_violations(xs, ys, chunk=32):
    n = len(xs)
    px, py = _np_pair_mul(xs[:, None], ys[:, None], xs[None, :], ys[None, :])
    bad = 0
    for lo in range(0, n, chunk):
        hi = min(lo + chunk, n)
        lx, ly = _np_pair_mul(
            px[lo:hi, :, None], py[lo:hi, :, None], xs[None, None, :], ys[None, None, :]
        )
        rx, ry = _np_pair_mul(
            xs[lo:hi, None, None], ys[lo:hi, None, None], px[None, :, :], py[None, :, :]
        )
        bad += int(np.count_nonzero((lx != rx) | (ly != ry)))
    return bad


_NUMPY_IMPL = {
    "pair_mul": _np_pair_mul,
    "ray_union_mask": _np_ray_union_mask,
    "assoc_violations": _np_assoc_violations,
}


def _build_numba_impl():
    from numba import njit

    @njit(cache=False)
    def _mul_flat(ax, ay, bx, by, cx, cy):
        for k in range(ax.shape[0]):
            a, b, c, d = ax[k], ay[k], bx[k], by[k]
            if b < c:
                cx[k] = a - b + c
                cy[k] = d
            elif b == c:
                cx[k] = a
                cy[k] = d
            else:
                cx[k] = a
                cy[k] = d + b - c

    def pair_mul(ax, ay, bx, by):
        ax, ay, bx, by = np.broadcast_arrays(ax, ay, bx, by)
        shape = ax.shape
        fa = np.ascontiguousarray(ax, dtype=np.int64).ravel()
        fb = np.ascontiguousarray(ay, dtype=np.int64).ravel()
        fc = np.ascontiguousarray(bx, dtype=np.int64).ravel()
        fd = np.ascontiguousarray(by, dtype=np.int64).ravel()
        cx = np.empty_like(fa)
        cy = np.empty_like(fa)
        _mul_flat(fa, fb, fc, fd, cx, cy)
        return cx.reshape(shape), cy.reshape(shape)

    @njit(cache=False)
    def _ray_mask_flat(X, Y, AX, AY, out):
        for k in range(X.shape[0]):
            d = X[k] - Y[k]
            hit = False
            for i in range(AX.shape[0]):
                if d == AX[i] - AY[i] and X[k] <= AX[i]:
                    hit = True
                    break
            out[k] = hit

    def ray_union_mask(X, Y, AX, AY):
        X, Y = np.broadcast_arrays(X, Y)
        shape = X.shape
        fx = np.ascontiguousarray(X, dtype=np.int64).ravel()
        fy = np.ascontiguousarray(Y, dtype=np.int64).ravel()
        out = np.empty(fx.shape[0], dtype=np.bool_)
        _ray_mask_flat(fx, fy, np.asarray(AX, dtype=np.int64), np.asarray(AY, dtype=np.int64), out)
        return out.reshape(shape)

    @njit(cache=False)
    def _assoc(xs, ys):
        n = xs.shape[0]
        bad = 0
        for i in range(n):
            a, b = xs[i], ys[i]
            for j in range(n):
                c, d = xs[j], ys[j]
                if b < c:
                    px, py = a - b + c, d
                elif b == c:
                    px, py = a, d
                else:
                    px, py = a, d + b - c
                for k in range(n):
                    e, f = xs[k], ys[k]
                    if py < e:
                        lx, ly = px - py + e, f
                    elif py == e:
                        lx, ly = px, f
                    else:
                        lx, ly = px, f + py - e
                    if d < e:
                        qx, qy = c - d + e, f
                    elif d == e:
                        qx, qy = c, f
                    else:
                        qx, qy = c, f + d - e
                    if b < qx:
                        rx, ry = a - b + qx, qy
                    elif b == qx:
                        rx, ry = a, qy
                    else:
                        rx, ry = a, qy + b - qx
                    if lx != rx or ly != ry:
                        bad += 1
        return bad

    def assoc_violations(xs, ys):
        return int(_assoc(np.asarray(xs, dtype=np.int64), np.asarray(ys, dtype=np.int64)))

    return {
        "pair_mul": pair_mul,
        "ray_union_mask": ray_union_mask,
        "assoc_violations": assoc_violations,
    }


_disabled = os.environ.get("EXTBICYCLIC_NO_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}
_NUMBA_IMPL = None
if not _disabled:
    try:
        _NUMBA_IMPL = _build_numba_impl()
    except ImportError:
        _NUMBA_IMPL = None

_ACTIVE = _NUMBA_IMPL if _NUMBA_IMPL is not None else _NUMPY_IMPL


def backend() -> str:
    return "numba" if _ACTIVE is _NUMBA_IMPL and _NUMBA_IMPL is not None else "numpy"


def backends() -> dict:
    """All available implementations, keyed by name (for parity tests and benchmarks)."""
    out = {"numpy": _NUMPY_IMPL}
    if _NUMBA_IMPL is not None:
        out["numba"] = _NUMBA_IMPL
    return out


def pair_mul(ax, ay, bx, by):
    return _ACTIVE["pair_mul"](ax, ay, bx, by)


def ray_union_mask(X, Y, AX, AY):
    return _ACTIVE["ray_union_mask"](X, Y, AX, AY)


def assoc_violations(xs, ys):
    return _ACTIVE["assoc_violations"](xs, ys)
