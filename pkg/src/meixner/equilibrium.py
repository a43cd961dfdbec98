"""Equilibrium measure, g- and phase functions and the turning-point maps.

With ``a = (1 - sqrt c)/(1 + sqrt c)`` and ``b = 1/a`` the equilibrium density
is 1 on ``(0, a)`` and ``arccos((x(b+a) - 2)/(x(b-a)))/pi`` on ``(a, b)``.
The phase function ``phi`` vanishes at ``b`` and has the derivative

    phi'(z) = log[(z(b+a) - 2 + 2 sqrt((z-a)(z-b))) / (z(b-a))].

``phi`` and ``phi_tilde`` are evaluated from closed-form antiderivatives
(see :func:`phi`) in extended precision; :func:`phi_quad` integrates the
derivative directly and serves as an independent check.

Boundary values on cuts are selected with ``side`` (``"upper"``/``+1`` or
``"lower"``/``-1``) rather than by offsetting the argument.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from .errors import BranchCutError, DomainError, PoleError
from .numerics import to_fraction, to_mpc
from .quadrature import integrate, integrate_path

__all__ = [
    "TurningPoints",
    "BandCoordinates",
    "turning_points",
    "parse_side",
    "rho",
    "g_prime",
    "phi",
    "phi_tilde",
    "phi_mp",
    "phi_tilde_mp",
    "phi_quad",
    "v_linear",
    "lagrange_l",
    "g_function",
    "g_direct",
    "band_coordinates",
    "F_map",
    "F_tilde_map",
    "F_mp",
    "F_tilde_mp",
    "F_ratio_mp",
    "F_tilde_ratio_mp",
]

PHASE_DPS = 40


@dataclass(frozen=True)
class TurningPoints:
    """Turning points ``a < 1 < b`` with ``a b = 1`` for a given ``c``."""

    c: Fraction
    a: float
    b: float

    def mp(self):
        """``(a, b, log c)`` as mpmath numbers at the current precision."""
        c = mpmath.mpf(self.c.numerator) / self.c.denominator
        r = mpmath.sqrt(c)
        return (1 - r) / (1 + r), (1 + r) / (1 - r), mpmath.log(c)

    @property
    def log_c(self) -> float:
        return math.log(self.c)

    @property
    def radius_a(self) -> float:
        """Radius of the disk about ``a`` on which ``F_tilde`` is defined."""
        return min(self.a, self.b - self.a)

    @property
    def radius_b(self) -> float:
        """Radius of the disk about ``b`` on which ``F`` is defined."""
        return self.b - self.a


@dataclass(frozen=True)
class BandCoordinates:
    """Angles with ``z = ((b-a)/2) cos u + (b+a)/2`` and ``u + u_tilde = pi``."""

    u: float
    u_tilde: float


def turning_points(c) -> TurningPoints:
    """Turning points for ``0 < c < 1``.

    ``c`` may be given exactly (Fraction or decimal string) or as a float.
    """
    cf = to_fraction(c)
    if not 0 < cf < 1:
        raise DomainError(f"c must lie in (0, 1), got {c}")
    r = math.sqrt(cf)
    return TurningPoints(cf, (1 - r) / (1 + r), (1 + r) / (1 - r))


def parse_side(side) -> int:
    """Map ``None``/``"upper"``/``"lower"``/``+-1`` to 0, +1 or -1."""
    if side is None or side == 0:
        return 0
    if side in ("upper", "+", 1):
        return 1
    if side in ("lower", "-", -1):
        return -1
    raise ValueError(f"side must be None, 'upper' or 'lower', got {side!r}")


# --------------------------------------------------------------------------
# sided elementary functions (work on mpmath and Python numbers)
# --------------------------------------------------------------------------

def _ssqrt(w, s):
    """Principal square root; on the negative axis the ``s`` boundary value."""
    if s and w.imag == 0 and w.real < 0:
        return mpmath.mpc(0, s * mpmath.sqrt(-w.real))
    return mpmath.sqrt(w)


def _slog(w, s):
    if s and w.imag == 0 and w.real < 0:
        return mpmath.mpc(mpmath.log(-w.real), s * mpmath.pi)
    return mpmath.log(w)


def _on_axis(z) -> bool:
    return z.imag == 0


# --------------------------------------------------------------------------
# density and g'
# --------------------------------------------------------------------------

def rho(x, tp: TurningPoints):
    """Equilibrium density on ``[0, b]`` (vectorised)."""
    x = np.asarray(x, dtype=float)
    if np.any((x < 0) | (x > tp.b * (1 + 1e-15))):
        raise DomainError("rho is defined on [0, b]")
    a, b = tp.a, tp.b
    with np.errstate(divide="ignore", invalid="ignore"):
        arg = (x * (b + a) - 2.0) / (x * (b - a))
    arg = np.clip(np.nan_to_num(arg, nan=-1.0, neginf=-1.0), -1.0, 1.0)
    out = np.where(x < a, 1.0, np.arccos(arg) / np.pi)
    return out[()] if out.ndim == 0 else out


def g_prime(z, tp: TurningPoints, side=None) -> complex:
    """``g'(z)`` from its closed form; analytic off ``[0, b]``.

    On ``(0, b)`` the boundary value selected by ``side`` is returned.
    """
    s = parse_side(side)
    with mpmath.workdps(PHASE_DPS):
        z = to_mpc(z)
        a, b, logc = tp.mp()
        if z == 0:
            raise PoleError("g' has a singularity at 0")
        if _on_axis(z) and 0 < z.real < b and not s:
            raise BranchCutError("g' on (0, b) needs a side")
        if min(abs(z - a), abs(z - b)) < 1e-10:
            warnings.warn("g' evaluated within 1e-10 of a turning point", RuntimeWarning, stacklevel=2)
        return complex(-_phi_prime_mp(z, a, b, s) - logc / 2)


def _phi_prime_mp(z, a, b, s):
    r = _ssqrt(z - a, s) * _ssqrt(z - b, s)
    q = (z * (b + a) - 2 + 2 * r) / (z * (b - a))
    if s and _on_axis(z) and 0 < z.real < a:
        return mpmath.mpc(mpmath.log(abs(q)), s * mpmath.pi)
    return mpmath.log(q)


# --------------------------------------------------------------------------
# phi and phi-tilde
# --------------------------------------------------------------------------

def _check_phi_domain(z, b, s):
    if z == 0:
        raise PoleError("phi has a logarithmic singularity at 0")
    if _on_axis(z) and z.real < b and not s:
        raise BranchCutError("phi on (-inf, b) needs a side")


def _check_phi_tilde_domain(z, a, s):
    if z == 0:
        raise PoleError("phi_tilde has a logarithmic singularity at 0")
    if _on_axis(z) and (z.real < 0 or z.real > a) and not s:
        raise BranchCutError("phi_tilde on (-inf, 0) U (a, inf) needs a side")


def phi_mp(z, tp: TurningPoints, side=None):
    """``phi(z)`` as an mpmath number at the current working precision.

    Uses the antiderivative

        z [2 log(sqrt(b) sqrt(z-a) + sqrt(a) sqrt(z-b)) - log z - log(b-a)]
          - 2 log(sqrt(z-a) + sqrt(z-b)) + log(b-a),

    which vanishes at ``b`` and is analytic off ``(-inf, b]``.
    """
    s = parse_side(side)
    z = to_mpc(z)
    a, b, _ = tp.mp()
    _check_phi_domain(z, b, s)
    za, zb = _ssqrt(z - a, s), _ssqrt(z - b, s)
    lba = mpmath.log(b - a)
    inner = 2 * mpmath.log(mpmath.sqrt(b) * za + mpmath.sqrt(a) * zb) - _slog(z, s) - lba
    return z * inner - 2 * mpmath.log(za + zb) + lba


def phi_tilde_mp(z, tp: TurningPoints, side=None):
    """``phi_tilde(z)`` in mpmath; vanishes at ``a``, analytic off ``(-inf,0] U [a,inf)``.

    Equals ``phi(z) + i pi (1 - z)`` in the upper and ``phi(z) - i pi (1 - z)``
    in the lower half-plane.
    """
    s = parse_side(side)
    z = to_mpc(z)
    a, b, _ = tp.mp()
    _check_phi_tilde_domain(z, a, s)
    az, bz = _ssqrt(a - z, -s), _ssqrt(b - z, -s)
    lba = mpmath.log(b - a)
    inner = 2 * mpmath.log(mpmath.sqrt(a) * bz + mpmath.sqrt(b) * az) - _slog(z, s) - lba
    return z * inner - 2 * mpmath.log(az + bz) + lba


def phi(z, tp: TurningPoints, side=None) -> complex:
    """Phase function ``phi(z)``, cut on ``(-inf, b]``.

    Parameters
    ----------
    z : complex or exact number
    tp : TurningPoints
    side : {None, "upper", "lower"}
        Boundary value to take when ``z`` lies on the cut.
    """
    with mpmath.workdps(PHASE_DPS):
        return complex(phi_mp(z, tp, side))


def phi_tilde(z, tp: TurningPoints, side=None) -> complex:
    """Phase function ``phi_tilde(z)``, cut on ``(-inf, 0] U [a, inf)``."""
    with mpmath.workdps(PHASE_DPS):
        return complex(phi_tilde_mp(z, tp, side))


def _phi_prime_np(zeta, a, b):
    r = np.sqrt(zeta - a) * np.sqrt(zeta - b)
    return np.log((zeta * (b + a) - 2.0 + 2.0 * r) / (zeta * (b - a)))


def phi_quad(z, tp: TurningPoints, side=None, tol: float = 1e-12, detour: float = 0.5) -> complex:
    """``phi(z)`` by adaptive quadrature of ``phi'`` along a path from ``b``.

    The path is the straight segment when it stays more than ``1e-3`` away
    from ``(-inf, b]``; otherwise it detours through ``Im = +-detour``.
    Independent of the closed form used by :func:`phi`.
    """
    s = parse_side(side)
    z = complex(z)
    a, b = tp.a, tp.b
    if z == 0:
        raise PoleError("phi has a logarithmic singularity at 0")
    if z.imag == 0 and z.real < b and not s:
        raise BranchCutError("phi on (-inf, b) needs a side")
    f = lambda t: _phi_prime_np(t, a, b)  # noqa: E731
    if z.imag == 0 and z.real >= b:
        return integrate(f, complex(b), z, abs_tol=tol)
    if abs(z.imag) > 1e-3:
        return integrate(f, complex(b), z, abs_tol=tol)
    h = (s or (1 if z.imag > 0 else -1)) * detour
    return integrate_path(f, [complex(b), complex(b, h), complex(z.real, h), z], abs_tol=tol)


# --------------------------------------------------------------------------
# g, v, l
# --------------------------------------------------------------------------

def v_linear(z, tp: TurningPoints) -> complex:
    """External field ``v(z) = -z log c``."""
    return -complex(z) * tp.log_c


def lagrange_l(tp: TurningPoints) -> float:
    """Lagrange multiplier ``l = 2 log((b-a)/4) - 2``."""
    return 2.0 * math.log((tp.b - tp.a) / 4.0) - 2.0


def g_function(z, tp: TurningPoints, side=None) -> complex:
    """``g(z) = (v(z) + l)/2 - phi(z)``, cut on ``(-inf, b]``."""
    with mpmath.workdps(PHASE_DPS):
        zz = to_mpc(z)
        a, b, logc = tp.mp()
        l = 2 * mpmath.log((b - a) / 4) - 2
        return complex((-zz * logc + l) / 2 - phi_mp(zz, tp, side))


def g_direct(z, tp: TurningPoints, side=None, tol: float = 1e-12) -> complex:
    """``g(z) = int_0^b log(z - x) rho(x) dx`` by direct quadrature (test oracle)."""
    s = parse_side(side)
    z = complex(z)
    a, b = tp.a, tp.b
    on_axis = z.imag == 0
    if on_axis and z.real < b and not s:
        raise BranchCutError("g on (-inf, b) needs a side")

    def logzx(x):
        x = np.real(x)
        if on_axis:
            d = z.real - x
            return np.log(np.abs(d)) + 1j * np.pi * s * (d < 0)
        return np.log(z - x)

    bps = []
    if on_axis and 0 < z.real < b:
        bps = [z.real]
    def piece(lo, hi, dens):
        t = [(p - lo) / (hi - lo) for p in bps if lo < p < hi]
        return integrate(lambda x: logzx(x) * dens(np.real(x)), lo, hi,
                         abs_tol=tol / 2, breakpoints=t)
    return (piece(0.0, a, lambda x: 1.0)
            + piece(a, b, lambda x: rho(np.clip(x, 0.0, b), tp)))


# --------------------------------------------------------------------------
# band coordinates and turning-point maps
# --------------------------------------------------------------------------

def band_coordinates(x: float, tp: TurningPoints) -> BandCoordinates:
    """Angles ``u`` and ``u_tilde = pi - u`` of a point of ``[a, b]``."""
    a, b = tp.a, tp.b
    if not a - 1e-12 <= x <= b + 1e-12:
        raise DomainError("band coordinates need a <= x <= b")
    w = min(1.0, max(-1.0, (2.0 * x - a - b) / (b - a)))
    u = math.acos(w)
    return BandCoordinates(u, math.pi - u)


_SERIES_RADIUS = 1e-10


def F_ratio_mp(z, n: int, tp: TurningPoints):
    """``F(z)/(z - b)``, analytic and positive on the real axis near ``b``.

    Equal to ``(3 n phi / (2 (z-b)^(3/2)))^(2/3)``; for ``|z - b| < 1e-10``
    the Taylor polynomial of the inner ratio is used.
    """
    z = to_mpc(z)
    a, b, _ = tp.mp()
    t = z - b
    if abs(t) >= tp.radius_b:
        raise DomainError(f"F is defined for |z - b| < {tp.radius_b:.6g}")
    if abs(t) < _SERIES_RADIUS:
        k = 4 / (3 * b * mpmath.sqrt(b - a))
        r = k * (1 + t * (-1 / b - 1 / (2 * (b - a))) / 5)
    else:
        r = phi_mp(z, tp, 1 if _on_axis(z) else None) / (t * _ssqrt(t, 1 if _on_axis(z) else 0))
    return (mpmath.mpf(3) / 2 * n * r) ** (mpmath.mpf(2) / 3)


def F_tilde_ratio_mp(z, n: int, tp: TurningPoints):
    """``F_tilde(z)/(a - z)``, analytic and positive on the real axis near ``a``."""
    z = to_mpc(z)
    a, b, _ = tp.mp()
    t = a - z
    if abs(t) >= tp.radius_a:
        raise DomainError(f"F_tilde is defined for |z - a| < {tp.radius_a:.6g}")
    if abs(t) < _SERIES_RADIUS:
        k = 4 / (3 * a * mpmath.sqrt(b - a))
        r = k * (1 + t * (1 / a - 1 / (2 * (b - a))) / 5)
    else:
        side = 1 if _on_axis(z) else None
        r = -phi_tilde_mp(z, tp, side) / (t * _ssqrt(t, -1 if side else 0))
    return (mpmath.mpf(3) / 2 * n * r) ** (mpmath.mpf(2) / 3)


def F_mp(z, n: int, tp: TurningPoints):
    """``F(z) = (3 n phi(z) / 2)^(2/3)`` in the disk about ``b`` (mpmath).

    Written as ``(z-b) * (3 n phi / (2 (z-b)^(3/2)))^(2/3)``, where the ratio
    is analytic at ``b`` (see :func:`F_ratio_mp`).
    """
    z = to_mpc(z)
    return (z - tp.mp()[1]) * F_ratio_mp(z, n, tp)


def F_tilde_mp(z, n: int, tp: TurningPoints):
    """``F_tilde(z) = (-3 n phi_tilde(z) / 2)^(2/3)`` in the disk about ``a``."""
    z = to_mpc(z)
    return (tp.mp()[0] - z) * F_tilde_ratio_mp(z, n, tp)


def F_map(z, n: int, tp: TurningPoints) -> complex:
    """Airy variable at ``b``; real and increasing along the real axis."""
    with mpmath.workdps(PHASE_DPS):
        return complex(F_mp(z, n, tp))


def F_tilde_map(z, n: int, tp: TurningPoints) -> complex:
    """Airy variable at ``a``; real along the real axis, increasing in ``a - z``."""
    with mpmath.workdps(PHASE_DPS):
        return complex(F_tilde_mp(z, n, tp))
