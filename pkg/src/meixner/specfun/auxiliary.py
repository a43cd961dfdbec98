"""Auxiliary functions V, W, H, H~, E, E~, G~ and the constant L.

All quantities are computed in log space with :func:`~meixner.numerics.log_gamma`
in extended precision:

* ``W(z) = 2 i n pi Gamma(nz + beta/2) c^{-beta/2} / Gamma(nz + 1 - beta/2)``
* ``V(z) = log[Gamma(nz+1-beta/2) / (z^{1-beta} Gamma(nz+beta/2))] - log(2 n i pi c^{-beta/2})``
* ``H(z) = (z/(z-1))^{1-beta} W(z)``, ``H~(z) = (z/(1-z))^{1-beta} W(z)``
* ``E(z) = ((z-1)/z)^{(1-beta)/2} exp{-n int_0^1 log(z-x) dx} prod_k (z - X_k)``
  with ``X_k = (k + beta/2)/n``; the product is the Gamma ratio
  ``Gamma(nz - beta/2 + 1) / (n^n Gamma(nz - beta/2 - n + 1))``.
* ``E~(z) = +-i E(z) e^{-+i pi (nz - beta/2)} / (2 sin(pi (nz - beta/2)))`` in the
  upper/lower half-plane.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from ..equilibrium import parse_side
from ..errors import BranchCutError, DomainError, PoleError
from ..numerics import LogComplex, digamma, log_gamma, to_mpc
from ..quadrature import integrate

__all__ = [
    "NodeGrid",
    "AuxValues",
    "aux_values",
    "v_function",
    "v_prime",
    "w_log",
    "h_log",
    "h_tilde_log",
    "e_function",
    "e_tilde",
    "g_tilde_prime",
    "g_tilde",
    "big_l",
    "L_estimate",
]

AUX_DPS = 34


@dataclass(frozen=True)
class NodeGrid:
    """Scaled lattice ``X_k = (k + beta/2)/n``."""

    n: int
    beta: float

    def node(self, k: int) -> float:
        return (k + self.beta / 2) / self.n

    def nodes(self, count: int | None = None) -> np.ndarray:
        k = np.arange(self.n if count is None else count)
        return (k + self.beta / 2) / self.n

    def is_node(self, x, tol: float = 1e-12) -> bool:
        k = x * self.n - self.beta / 2
        return k > -0.5 and abs(k - round(k)) < tol * max(1.0, abs(k))


@dataclass(frozen=True)
class AuxValues:
    """Auxiliary functions at one point; ``None`` where undefined."""

    V: complex | None
    W: LogComplex | None
    H: LogComplex | None
    H_tilde: LogComplex | None
    E: complex | None
    E_tilde: complex | None
    L: complex


def _mp_params(params):
    c = mpmath.mpf(params.c.numerator) / params.c.denominator
    beta = mpmath.mpf(params.beta.numerator) / params.beta.denominator
    return int(params.n), beta, c


def _v_mp(z, params):
    n, beta, c = _mp_params(params)
    if z.imag == 0 and z.real <= 0:
        raise BranchCutError("V is cut along the non-positive real axis")
    return (log_gamma(n * z + 1 - beta / 2, AUX_DPS) - log_gamma(n * z + beta / 2, AUX_DPS)
            - (1 - beta) * mpmath.log(z)
            - mpmath.log(2 * n * mpmath.pi) - 1j * mpmath.pi / 2 + beta / 2 * mpmath.log(c))


def _w_log_mp(z, params):
    n, beta, c = _mp_params(params)
    return (mpmath.log(2 * n * mpmath.pi) + 1j * mpmath.pi / 2
            + log_gamma(n * z + beta / 2, AUX_DPS) - log_gamma(n * z + 1 - beta / 2, AUX_DPS)
            - beta / 2 * mpmath.log(c))


def v_function(z, params) -> complex:
    """``V(z)``; analytic off the non-positive real axis."""
    with mpmath.workdps(AUX_DPS):
        return complex(_v_mp(to_mpc(z), params))


def v_prime(s, params):
    """``V'(s) = n [psi(ns + 1 - beta/2) - psi(ns + beta/2)] - (1 - beta)/s`` (vectorised)."""
    n, beta = int(params.n), float(params.beta)
    s = np.asarray(s, dtype=complex)
    return n * (digamma(n * s + 1 - beta / 2) - digamma(n * s + beta / 2)) - (1 - beta) / s


def w_log(z, params) -> LogComplex:
    """``W(z)`` as a :class:`LogComplex`."""
    with mpmath.workdps(AUX_DPS):
        return LogComplex.from_log(complex(_w_log_mp(to_mpc(z), params)))


def _h_log_mp(z, params, s):
    _, beta, _ = _mp_params(params)
    if z.imag == 0 and 0 <= z.real <= 1 and not s:
        raise BranchCutError("H is cut along [0, 1]")
    if z == 0 or z == 1:
        raise PoleError("H is singular at 0 and 1")
    ratio = z / (z - 1)
    if z.imag == 0 and 0 < z.real < 1:
        lr = mpmath.mpc(mpmath.log(-ratio.real), -s * mpmath.pi)
    else:
        lr = mpmath.log(ratio)
    return (1 - beta) * lr + _w_log_mp(z, params)


def _h_tilde_log_mp(z, params):
    _, beta, _ = _mp_params(params)
    if z.imag == 0 and (z.real <= 0 or z.real >= 1):
        raise BranchCutError("H~ is cut along (-inf, 0] and [1, inf)")
    return (1 - beta) * mpmath.log(z / (1 - z)) + _w_log_mp(z, params)


def h_log(z, params, side=None) -> LogComplex:
    """``H(z) = (z/(z-1))^{1-beta} W(z)``, analytic off ``[0, 1]``."""
    with mpmath.workdps(AUX_DPS):
        return LogComplex.from_log(complex(_h_log_mp(to_mpc(z), params, parse_side(side))))


def h_tilde_log(z, params) -> LogComplex:
    """``H~(z) = (z/(1-z))^{1-beta} W(z)``, analytic off ``(-inf,0] U [1,inf)``."""
    with mpmath.workdps(AUX_DPS):
        return LogComplex.from_log(complex(_h_tilde_log_mp(to_mpc(z), params)))


def _e_log_mp(z, params, s):
    n, beta, _ = _mp_params(params)
    if z == 0 or z == 1:
        raise PoleError("E is singular at 0 and 1")
    on_cut = z.imag == 0 and 0 < z.real < 1
    if on_cut and not s:
        raise BranchCutError("E is cut along [0, 1]")
    w = n * z - beta / 2
    if on_cut:
        lratio = mpmath.mpc(mpmath.log((1 - z.real) / z.real), s * mpmath.pi)
        lzm1 = mpmath.mpc(mpmath.log(1 - z.real), s * mpmath.pi)
    else:
        lratio = mpmath.log((z - 1) / z)
        lzm1 = mpmath.log(z - 1)
    integral = z * mpmath.log(z) - (z - 1) * lzm1 - 1
    try:
        prod = log_gamma(w + 1, AUX_DPS) - log_gamma(w + 1 - n, AUX_DPS)
    except PoleError:
        factors = [w - k for k in range(n)]
        if any(f == 0 for f in factors):
            return None   # z is a node: the product vanishes
        prod = mpmath.fsum(mpmath.log(f) for f in factors)
    prod -= n * mpmath.log(n)
    return (1 - beta) / 2 * lratio - n * integral + prod


def e_function(z, params, side=None) -> complex:
    """``E(z)``; analytic off ``[0, 1]``, boundary values on ``(0, 1)`` via ``side``.

    Returns 0 at the nodes ``X_k`` (with a side) where the product vanishes.
    """
    s = parse_side(side)
    if params.n == 0:
        raise DomainError("E needs n >= 1")
    with mpmath.workdps(AUX_DPS):
        lg = _e_log_mp(to_mpc(z), params, s)
        return 0j if lg is None else complex(mpmath.exp(lg))


def _e_tilde_mp(z, params, s):
    n, beta, _ = _mp_params(params)
    if z.imag != 0:
        s = 1 if z.imag > 0 else -1
    elif not s:
        raise BranchCutError("E~ on the real axis needs a side")
    lg = _e_log_mp(z, params, s)
    w = n * z - beta / 2
    sn = mpmath.sinpi(w)
    if sn == 0:
        raise PoleError("E~ is evaluated at a node")
    e = mpmath.exp(lg)
    return s * 1j * e * mpmath.expjpi(-s * w) / (2 * sn)


def e_tilde(z, params, side=None) -> complex:
    """``E~(z)``; continuous across ``(0, 1)`` away from the nodes."""
    with mpmath.workdps(AUX_DPS):
        return complex(_e_tilde_mp(to_mpc(z), params, parse_side(side)))


# --------------------------------------------------------------------------
# G~ and L
# --------------------------------------------------------------------------

def _sqrt_ab(z, a, b):
    return np.sqrt(z - a) * np.sqrt(z - b)


def g_tilde_prime(z, params, tp=None, tol: float = 1e-11):
    """``G~'(z) = (1/(2 pi sqrt((z-a)(z-b)))) int_a^b V'(s) sqrt((s-a)(b-s)) / (s - z) ds``.

    Vectorised over ``z``; the ``s``-integral uses ``s = (a+b)/2 + (b-a)/2 cos t``.
    """
    from ..equilibrium import turning_points
    tp = tp or turning_points(params.c)
    a, b = tp.a, tp.b
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if np.any((z.imag == 0) & (z.real >= a) & (z.real <= b)):
        raise BranchCutError("G~' is cut along [a, b]")
    mid, half = 0.5 * (a + b), 0.5 * (b - a)

    def f(t):
        t = np.real(t)
        s = mid + half * np.cos(t)
        weight = v_prime(s, params) * (half * np.sin(t)) ** 2
        return weight[:, None] / (s[:, None] - z[None, :])

    val = integrate(f, 0.0, math.pi, abs_tol=tol)
    out = val / (2 * math.pi * _sqrt_ab(z, a, b))
    return complex(out[0]) if scalar else out


def g_tilde(z, params, direction=None, tol: float = 1e-10) -> complex:
    """``G~(z) = -int_z^inf G~'(zeta) d zeta`` along a ray.

    The ray leaves ``z`` in ``direction`` (default: away from the band
    centre); ``zeta = z + d (v/(1-v))^2`` maps ``v`` in ``[0, 1)`` onto it and
    removes the square-root singularity when ``z`` is a turning point.
    For ``z`` on ``(a, b)`` pass ``direction=1j`` (upper boundary value) or
    ``-1j``.
    """
    from ..equilibrium import turning_points
    tp = turning_points(params.c)
    z = complex(z)
    if direction is None:
        d = z - 0.5 * (tp.a + tp.b)
        direction = d / abs(d) if d != 0 else 1j
    d = complex(direction)

    def f(v):
        v = np.real(v)
        u = v / (1 - v)
        zeta = z + d * u * u
        return g_tilde_prime(zeta, params, tp, tol=tol * 0.1) * d * 2 * v / (1 - v) ** 3

    return -complex(integrate(f, 0.0, 1.0 - 1e-9, abs_tol=tol))


@functools.lru_cache(maxsize=64)
def big_l(params) -> complex:
    """``L = 2 G~(b) - V(b)``."""
    from ..equilibrium import turning_points
    tp = turning_points(params.c)
    return 2 * g_tilde(tp.b, params, direction=1.0) - v_function(tp.b, params)


def L_estimate(params) -> complex:
    """Leading form ``beta log n + log(2 i pi c^{-beta/2})``; error ``O(1/n)``."""
    n, beta, c = int(params.n), float(params.beta), float(params.c)
    return beta * math.log(n) + complex(math.log(2 * math.pi * c ** (-beta / 2)), math.pi / 2)


def aux_values(z, params, side=None) -> AuxValues:
    """All auxiliary functions at ``z``; entries undefined at ``z`` are ``None``."""
    s = parse_side(side)
    with mpmath.workdps(AUX_DPS):
        zz = to_mpc(z)

        def attempt(fn):
            try:
                return fn()
            except (BranchCutError, PoleError):
                return None

        V = attempt(lambda: complex(_v_mp(zz, params)))
        W = attempt(lambda: LogComplex.from_log(complex(_w_log_mp(zz, params))))
        H = attempt(lambda: LogComplex.from_log(complex(_h_log_mp(zz, params, s))))
        Ht = attempt(lambda: LogComplex.from_log(complex(_h_tilde_log_mp(zz, params))))
        E = attempt(lambda: e_function(zz, params, side))
        Et = attempt(lambda: complex(_e_tilde_mp(zz, params, s)))
    return AuxValues(V, W, H, Ht, E, Et, big_l(params))
