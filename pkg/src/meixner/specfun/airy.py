"""Airy functions Ai, Bi and their derivatives for real and complex arguments.

For ``|z| <= 10`` the Maclaurin series is summed in extended precision (the
extra digits absorb the ``exp(2 zeta)`` cancellation in Ai for large positive
arguments).  Beyond that the exponential asymptotic expansion is used in the
sector ``|arg z| <= 2 pi/3`` and the relation
``Ai(z) + w Ai(w z) + w^2 Ai(w^2 z) = 0`` (``w = exp(2 pi i/3)``) elsewhere.
Bi is obtained from Ai off the series disk via
``Bi(z) = e^{i pi/6} Ai(z w) + e^{-i pi/6} Ai(z w^2)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

__all__ = ["AiryQuad", "airy", "airy_complex", "airy_mp", "connection_check", "SERIES_RADIUS"]

SERIES_RADIUS = 10.0
_SCALE_THRESHOLD = 100.0


@dataclass(frozen=True)
class AiryQuad:
    """``Ai, Ai', Bi, Bi'`` at one point.

    When ``zeta_scale`` is non-zero the stored values are scaled:
    the true Ai and Ai' are ``ai * exp(-zeta_scale)`` and ``ai_prime *
    exp(-zeta_scale)``, the true Bi and Bi' carry ``exp(+zeta_scale)``.
    The Wronskian ``ai*bi_prime - ai_prime*bi`` is unaffected by the scaling.
    """

    ai: float
    ai_prime: float
    bi: float
    bi_prime: float
    zeta_scale: float = 0.0

    @property
    def wronskian(self) -> float:
        return self.ai * self.bi_prime - self.ai_prime * self.bi


def _series(z):
    """Maclaurin sums of Ai, Ai', Bi, Bi' (precision set by the caller)."""
    eps = mpmath.mpf(2) ** (-mpmath.mp.prec)
    z3 = z ** 3
    f, fp, g, gp = mpmath.mpc(1), mpmath.mpc(0), z, mpmath.mpc(1)
    t, p, s, q = mpmath.mpc(1), z * z / 2, z, mpmath.mpc(1)
    fp = p
    k = 0
    while True:
        t = t * z3 / ((3 * k + 2) * (3 * k + 3))
        s = s * z3 / ((3 * k + 3) * (3 * k + 4))
        q = q * z3 / ((3 * k + 1) * (3 * k + 3))
        p = p * z3 / ((3 * k + 3) * (3 * k + 5))
        f += t
        g += s
        gp += q
        fp += p
        k += 1
        if max(abs(t), abs(s), abs(p), abs(q)) <= eps * max(1, abs(f), abs(g)):
            break
    c1 = 1 / (mpmath.cbrt(9) * mpmath.gamma(mpmath.mpf(2) / 3))
    c2 = 1 / (mpmath.cbrt(3) * mpmath.gamma(mpmath.mpf(1) / 3))
    r3 = mpmath.sqrt(3)
    return (c1 * f - c2 * g, c1 * fp - c2 * gp, r3 * (c1 * f + c2 * g), r3 * (c1 * fp + c2 * gp))


def _ai_expansion(z):
    """Exponential asymptotic expansion of Ai and Ai', ``|arg z| <= 2 pi/3``."""
    zeta = 2 * z * mpmath.sqrt(z) / 3
    eps = mpmath.mpf(2) ** (-mpmath.mp.prec)
    su = sv = mpmath.mpc(1)
    u = mpmath.mpf(1)
    term_prev = mpmath.inf
    k = 0
    while True:
        k += 1
        u = u * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k)
        v = -u * (6 * k + 1) / (6 * k - 1)
        zk = (-zeta) ** k
        tu, tv = u / zk, v / zk
        if abs(tu) >= term_prev or abs(tu) < eps:
            break
        su += tu
        sv += tv
        term_prev = abs(tu)
    pre = mpmath.exp(-zeta) / (2 * mpmath.sqrt(mpmath.pi))
    q = mpmath.root(z, 4)
    return pre / q * su, -pre * q * sv


def _ai_large(z):
    if abs(mpmath.arg(z)) <= 2 * mpmath.pi / 3:
        return _ai_expansion(z)
    w = mpmath.expjpi(mpmath.mpf(2) / 3)
    w2 = w * w
    a1, d1 = _ai_expansion(w * z)
    a2, d2 = _ai_expansion(w2 * z)
    # derivative of Ai(w z) is w Ai'(w z)
    return -w * a1 - w2 * a2, -w2 * d1 - w * d2


def airy_mp(z):
    """``(Ai, Ai', Bi, Bi')`` at ``z`` as mpmath complex numbers.

    Accurate to the current mpmath working precision (series disk) or to the
    smallest term of the asymptotic expansion, below ``1e-18`` relative, off
    the disk.
    """
    z = mpmath.mpc(z)
    r = abs(z)
    if r <= SERIES_RADIUS:
        extra = int(2 * (2.0 / 3.0) * float(r) ** 1.5 / math.log(10)) + 5
        with mpmath.extradps(extra):
            out = _series(z)
        return tuple(+v for v in out)
    with mpmath.extradps(5):
        ai, aip = _ai_large(z)
        w = mpmath.expjpi(mpmath.mpf(2) / 3)
        a1, d1 = _ai_large(z * w)
        a2, d2 = _ai_large(z / w)
        e6 = mpmath.expjpi(mpmath.mpf(1) / 6)
        e56 = mpmath.expjpi(mpmath.mpf(5) / 6)
        bi = e6 * a1 + a2 / e6
        bip = e56 * d1 + d2 / e56
    return +ai, +aip, +bi, +bip


def airy_complex(z) -> tuple[complex, complex, complex, complex]:
    """Complex ``(Ai, Ai', Bi, Bi')`` in double precision."""
    with mpmath.workdps(20):
        return tuple(complex(v) for v in airy_mp(z))


def airy(x: float) -> AiryQuad:
    """Ai, Ai', Bi, Bi' at a real point.

    For ``x > 100`` the values are returned scaled by ``exp(-+ 2 x^1.5 / 3)``
    (see :class:`AiryQuad`) to avoid overflow.
    """
    x = float(x)
    with mpmath.workdps(20):
        ai, aip, bi, bip = airy_mp(x)
        scale = 0.0
        if x > _SCALE_THRESHOLD:
            scale = 2.0 * x ** 1.5 / 3.0
            up, down = mpmath.exp(scale), mpmath.exp(-scale)
            ai, aip, bi, bip = ai * up, aip * up, bi * down, bip * down
        return AiryQuad(float(ai.real), float(aip.real), float(bi.real), float(bip.real), scale)


def connection_check(z) -> float:
    """Residual ``|2 w Ai(w z) + Ai(z) - i Bi(z)|`` with ``w = exp(2 pi i/3)``."""
    with mpmath.workdps(25):
        z = mpmath.mpc(z)
        w = mpmath.expjpi(mpmath.mpf(2) / 3)
        ai, _, bi, _ = airy_mp(z)
        aw = airy_mp(w * z)[0]
        return float(abs(2 * w * aw + ai - 1j * bi))
