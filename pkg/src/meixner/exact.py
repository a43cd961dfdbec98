"""Exact evaluation of Meixner polynomials in rational arithmetic.

This is the ground truth every asymptotic formula is checked against.  Two
independent routes are provided, the terminating hypergeometric sum and the
three-term recurrence of the monic polynomials; they agree exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DomainError
from .numerics import GaussianRational, from_big_rational, to_fraction, to_gaussian

__all__ = [
    "MeixnerParams",
    "meixner_hyp",
    "monic_from_meixner",
    "monic_recurrence",
    "monic_coefficients",
    "eval_scaled_exact",
    "weight_ratio",
    "squared_norm",
]


@dataclass(frozen=True)
class MeixnerParams:
    """Parameters ``(c, beta, n)`` with ``0 < c < 1``, ``1 <= beta < 2``.

    ``c`` and ``beta`` are stored as exact fractions; decimal strings such as
    ``"0.5"`` are parsed exactly.
    """

    c: Fraction
    beta: Fraction
    n: int

    def __post_init__(self):
        c = to_fraction(self.c)
        beta = to_fraction(self.beta)
        if not 0 < c < 1:
            raise DomainError(f"c must lie in (0, 1), got {c}")
        if not 1 <= beta < 2:
            raise DomainError(f"beta must lie in [1, 2), got {beta}")
        if int(self.n) != self.n or self.n < 0:
            raise DomainError(f"n must be a non-negative integer, got {self.n}")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "n", int(self.n))

    def with_n(self, n: int) -> MeixnerParams:
        return MeixnerParams(self.c, self.beta, n)


def meixner_hyp(params: MeixnerParams, x) -> GaussianRational:
    """``M_n(x; beta, c)`` from its terminating hypergeometric sum.

    Sum over k of ``(-n)_k (-x)_k / ((beta)_k k!) * (1 - 1/c)^k``.
    """
    x = to_gaussian(x)
    n, beta = params.n, params.beta
    r = 1 - 1 / params.c
    if x.is_real:
        xr, term, total = x.re, Fraction(1), Fraction(1)
        for k in range(n):
            term = -term * (xr - k) * Fraction(-n + k) * r / ((beta + k) * (k + 1))
            total += term
        return GaussianRational(total)
    term = GaussianRational(Fraction(1))
    total = term
    for k in range(n):
        term = term * (x - k) * (Fraction(-n + k) * r / ((beta + k) * (k + 1))) * -1
        total = total + term
    return total


def monic_from_meixner(params: MeixnerParams, x) -> GaussianRational:
    """Monic ``pi_n(x) = (beta)_n (1 - 1/c)^(-n) M_n(x)``."""
    n, beta = params.n, params.beta
    poch = Fraction(1)
    for k in range(n):
        poch *= beta + k
    scale = poch / (1 - 1 / params.c) ** n
    return meixner_hyp(params, x) * scale


def _recurrence_coefficients(params: MeixnerParams, k: int):
    c, beta = params.c, params.beta
    b_k = (k + (k + beta) * c) / (1 - c)
    a_k = k * (k + beta - 1) * c / (1 - c) ** 2
    return b_k, a_k


def monic_recurrence(params: MeixnerParams, x) -> GaussianRational:
    """Monic ``pi_n(x)`` by the forward three-term recurrence.

    ``x pi_k = pi_{k+1} + B_k pi_k + A_k pi_{k-1}`` with ``pi_0 = 1``,
    ``pi_{-1} = 0``.
    """
    x = to_gaussian(x)
    if x.is_real:
        xr = x.re
        prev, cur = Fraction(0), Fraction(1)
        for k in range(params.n):
            b_k, a_k = _recurrence_coefficients(params, k)
            prev, cur = cur, (xr - b_k) * cur - a_k * prev
        return GaussianRational(cur)
    prev, cur = GaussianRational(Fraction(0)), GaussianRational(Fraction(1))
    for k in range(params.n):
        b_k, a_k = _recurrence_coefficients(params, k)
        prev, cur = cur, (x - b_k) * cur - prev * a_k
    return cur


def monic_coefficients(params: MeixnerParams) -> list[Fraction]:
    """Power-basis coefficients of ``pi_n``, lowest degree first."""
    prev, cur = [], [Fraction(1)]
    for k in range(params.n):
        b_k, a_k = _recurrence_coefficients(params, k)
        nxt = [Fraction(0)] + cur
        for i, v in enumerate(cur):
            nxt[i] -= b_k * v
        for i, v in enumerate(prev):
            nxt[i] -= a_k * v
        prev, cur = cur, nxt
    return cur


def eval_scaled_exact(params: MeixnerParams, z_outer):
    """Exact ``pi_n(n z - beta/2)`` converted to scaled form.

    Returns a :class:`~meixner.numerics.ScaledReal` for real ``z_outer`` and a
    :class:`~meixner.numerics.LogComplex` otherwise.
    """
    z = to_gaussian(z_outer)
    x = z * params.n - params.beta / 2
    return from_big_rational(monic_recurrence(params, x))


def weight_ratio(params: MeixnerParams, k: int) -> Fraction:
    """Normalised discrete weight ``(beta)_k c^k / k!``."""
    if k < 0:
        raise DomainError("k must be non-negative")
    w = Fraction(1)
    for j in range(k):
        w *= (params.beta + j) * params.c / (j + 1)
    return w


def squared_norm(params: MeixnerParams, m: int, dps: int = 40) -> mpmath.mpf:
    """``sum_k weight_ratio(k) M_m(k)^2 = c^(-m) m! / ((beta)_m (1-c)^beta)``."""
    with mpmath.workdps(dps):
        c = mpmath.mpf(params.c.numerator) / params.c.denominator
        beta = mpmath.mpf(params.beta.numerator) / params.beta.denominator
        return +(c ** (-m) * mpmath.factorial(m) / (mpmath.rf(beta, m) * (1 - c) ** beta))
