"""Adaptive Gauss-Kronrod (7/15) quadrature along straight segments in C."""
from __future__ import annotations

import heapq

import numpy as np

from .errors import QuadratureError

__all__ = ["gk15", "integrate", "integrate_path"]

# Kronrod abscissae (non-negative half) and weights; Gauss weights for the
# odd-indexed abscissae.
_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327])

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])          # 15 nodes, ascending
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])
_WG15 = np.zeros(15)
_WG15[[1, 3, 5, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[:-1][::-1]])
_WG15[7] = _WG[-1]


def gk15(f, a, b):
    """One Gauss-Kronrod 7/15 panel on the segment from ``a`` to ``b``.

    Returns the Kronrod estimate and ``|K - G|`` as error estimate.  ``f``
    may return shape ``(15,)`` or ``(15, m)``; for vector-valued integrands
    the error is the largest component error.
    """
    half = 0.5 * (b - a)
    x = 0.5 * (a + b) + half * _NODES
    fx = np.asarray(f(x))
    k = half * np.tensordot(_WK, fx, axes=(0, 0))
    g = half * np.tensordot(_WG15, fx, axes=(0, 0))
    return k, float(np.max(np.abs(k - g)))


def integrate(f, a, b, *, abs_tol=1e-12, rel_tol=0.0, breakpoints=(), max_panels=4000):
    """Integrate a vectorised ``f`` along the straight segment ``[a, b]``.

    Parameters
    ----------
    f : callable
        Accepts an ndarray of (possibly complex) points, returns values.
    a, b : complex
        Endpoints; the path is ``a + t (b - a)``, ``t`` in [0, 1].
    abs_tol, rel_tol : float
        Stop once the summed panel error is below
        ``max(abs_tol, rel_tol * |I|)``.
    breakpoints : sequence of float
        Interior parameters ``t`` in (0, 1) where the integrand is known to
        be rough; the initial partition is split there.
    max_panels : int
        Refinement budget.

    Raises
    ------
    QuadratureError
        If the tolerance is not met within ``max_panels`` panels.
    """
    ts = sorted({0.0, 1.0, *(float(t) for t in breakpoints if 0.0 < t < 1.0)})
    heap = []
    total = 0.0
    err = 0.0
    for t0, t1 in zip(ts[:-1], ts[1:]):
        p0, p1 = a + t0 * (b - a), a + t1 * (b - a)
        v, e = gk15(f, p0, p1)
        total += v
        err += e
        heapq.heappush(heap, (-e, len(heap), p0, p1, v))
    count = len(heap)
    while err > max(abs_tol, rel_tol * float(np.max(np.abs(total)))):
        if count >= max_panels:
            raise QuadratureError(
                f"tolerance {abs_tol:g} not met after {count} panels (error {err:.3g})")
        e_neg, _, p0, p1, v = heapq.heappop(heap)
        mid = 0.5 * (p0 + p1)
        v0, e0 = gk15(f, p0, mid)
        v1, e1 = gk15(f, mid, p1)
        total += v0 + v1 - v
        err += e0 + e1 + e_neg
        heapq.heappush(heap, (-e0, 2 * count, p0, mid, v0))
        heapq.heappush(heap, (-e1, 2 * count + 1, mid, p1, v1))
        count += 1
    # recompute the sum from the panels to shed accumulated rounding
    return sum(item[4] for item in heap)


def integrate_path(f, points, **kwargs):
    """Integrate along the polygonal path through ``points``."""
    tol = kwargs.pop("abs_tol", 1e-12)
    segs = list(zip(points[:-1], points[1:]))
    return sum(integrate(f, p0, p1, abs_tol=tol / len(segs), **kwargs) for p0, p1 in segs)
