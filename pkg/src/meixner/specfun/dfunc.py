"""The origin function D(z).

    D(z) = exp{ (1/2 pi i) int_0^inf [ log(1 - e^{-2 n pi s - i pi beta}) / (s + i z)
                                    - log(1 - e^{-2 n pi s + i pi beta}) / (s - i z) ] ds }

D is analytic off the imaginary axis, bounded, and tends to 1 as ``n`` grows
for ``z`` away from 0.  After ``t = 2 n pi s`` the integrand decays like
``e^{-t}`` and the range is truncated at ``t = 70``.  Since ``1 <= beta < 2``
the logarithms are regular at ``t = 0``.

On the imaginary axis the boundary values are obtained from the
Sokhotski-Plemelj formula: principal value plus or minus ``i pi`` times the
residue.  ``side="left"`` is the limit from ``Re z < 0`` (the ``+`` side of the
upward oriented axis), ``side="right"`` the limit from ``Re z > 0``.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from ..errors import BranchCutError, PoleError
from ..quadrature import integrate

__all__ = ["d_function", "parse_d_side", "T_MAX"]

T_MAX = 70.0


def parse_d_side(side) -> int:
    """``"left"``/``+1`` -> +1, ``"right"``/``-1`` -> -1, ``None`` -> 0."""
    if side is None or side == 0:
        return 0
    if side in ("left", "+", 1):
        return 1
    if side in ("right", "-", -1):
        return -1
    raise ValueError(f"side must be None, 'left' or 'right', got {side!r}")


def _n_beta(params):
    return int(params.n), float(params.beta)


def _f(t, sign, beta):
    """``log(1 - exp(-t + sign i pi beta))``."""
    return np.log1p(-np.exp(-t + sign * 1j * np.pi * beta))


def _principal_value(g, y, tol):
    """PV of ``int_0^T g(t)/(t - y) dt`` for ``0 < y < T``."""
    gy = g(np.array([y]))[0]
    def h(t):
        d = t - y
        return (g(t) - gy) / d
    bp = [y / T_MAX]
    return integrate(h, 0.0, T_MAX, abs_tol=tol, breakpoints=bp) + gy * math.log((T_MAX - y) / y)


def d_function(z, params, side=None, tol: float = 1e-12) -> complex:
    """Evaluate ``D(z)``.

    Parameters
    ----------
    z : complex
    params : MeixnerParams
        Only ``n`` and ``beta`` are used.
    side : {None, "left", "right"}
        Boundary value on the imaginary axis.
    tol : float
        Absolute quadrature tolerance on the exponent integral.

    Raises
    ------
    PoleError
        At ``z = 0``.
    BranchCutError
        On the imaginary axis without ``side``.
    """
    z = complex(z)
    n, beta = _n_beta(params)
    if z == 0:
        raise PoleError("D is singular at 0")
    if n == 0:
        return 1.0 + 0j
    s = parse_d_side(side)
    big_z = 2.0 * n * math.pi * z
    iz = 1j * big_z
    f1 = lambda t: _f(t, -1, beta)  # noqa: E731
    f2 = lambda t: _f(t, +1, beta)  # noqa: E731
    qtol = tol * 2 * math.pi

    if z.real != 0:
        # poles of the two terms sit at t = -iZ and t = iZ
        bps = []
        for p in (-iz, iz):
            if 0 < p.real < T_MAX:
                w = abs(p.imag)
                bps += [max(0.0, p.real - 10 * w), p.real, min(T_MAX, p.real + 10 * w)]
        integrand = lambda t: f1(t) / (t + iz) - f2(t) / (t - iz)  # noqa: E731
        val = integrate(integrand, 0.0, T_MAX, abs_tol=qtol,
                        breakpoints=[b / T_MAX for b in bps])
        return cmath.exp(val / (2j * math.pi))

    if not s:
        raise BranchCutError("D on the imaginary axis needs side='left' or 'right'")
    y = 2.0 * n * math.pi * z.imag        # iZ = -y
    if y > 0:
        pole, first = y, True
    else:
        pole, first = -y, False
    if pole < T_MAX:
        if first:
            i1 = _principal_value(f1, pole, qtol / 2) + s * 1j * math.pi * f1(np.array([pole]))[0]
            i2 = integrate(lambda t: f2(t) / (t + y), 0.0, T_MAX, abs_tol=qtol / 2)
            val = i1 - i2
        else:
            i1 = integrate(lambda t: f1(t) / (t - y), 0.0, T_MAX, abs_tol=qtol / 2)
            i2 = _principal_value(f2, pole, qtol / 2) - s * 1j * math.pi * f2(np.array([pole]))[0]
            val = i1 - i2
    else:
        val = integrate(lambda t: f1(t) / (t - y) - f2(t) / (t + y), 0.0, T_MAX, abs_tol=qtol)
    return cmath.exp(val / (2j * math.pi))
