"""Uniform large-n asymptotics of ``pi_n(n z - beta/2)``.

The plane is covered by eight regions, each with its own leading-order
formula:

==============  =======  ====================================================
region          formula  form
==============  =======  ====================================================
Outer           O4       ``n^n e^{n g(z)}`` times an algebraic amplitude
StripLeft       O1       ``sin(n pi z - beta pi/2) e^{-n phi~(z)}`` oscillation
OriginLeft      O0l      ``D(z)`` times the O4 form
OriginRight     O0r      ``D(z)`` times the O1 form
AiryA           Oa       Ai/Bi of ``F~(z)`` with a ``cos``/``sin`` mix
AiryB           Ob       Ai/Ai' of ``F(z)``
BandLeft        O2       ``cos(n pi z - ... -+ i n phi~)``
BandRight       O3       ``cos(pi/4 - beta u/2 -+ i n phi)``
==============  =======  ====================================================

The two band formulas coincide identically; both tags are kept so that the
reported formula follows the region, but the value is always computed from
the O3 form.  :func:`band_forms` returns both for comparison.

Every formula is assembled as a natural logarithm in extended precision and
only converted to :class:`~meixner.numerics.ScaledReal` (real ``z``) or
:class:`~meixner.numerics.LogComplex` at the end, so values near ``10^400``
never overflow.  On the real axis inside a cut the upper boundary values are
used and the result is checked to be real.
"""
from __future__ import annotations

import enum
import math
import warnings
from dataclasses import dataclass
from decimal import Decimal

import mpmath

from .equilibrium import (
    PHASE_DPS,
    TurningPoints,
    F_ratio_mp,
    F_tilde_ratio_mp,
    _slog,
    _ssqrt,
    phi_mp,
    phi_tilde_mp,
    turning_points,
)
from .errors import DomainError, MeixnerError, RegionError
from .numerics import LogComplex, ScaledReal, to_mpc
from .specfun.airy import airy_mp
from .specfun.dfunc import d_function

__all__ = [
    "RegionTag",
    "HalfPlane",
    "Region",
    "AsymptoticResult",
    "CancellationWarning",
    "FORMULA_OF",
    "default_eps_delta",
    "classify_region",
    "eval_outer",
    "eval_strip_left",
    "eval_origin",
    "eval_airy_a",
    "eval_airy_b",
    "eval_band",
    "band_forms",
    "evaluate",
]

# below this |z| the origin function D is folded into the error estimate
_D_RADIUS = 1.0
_REAL_TOL = 1e-8
_O2_O3_TOL = 1e-9


class RegionTag(str, enum.Enum):
    OUTER = "Outer"
    STRIP_LEFT = "StripLeft"
    ORIGIN_LEFT = "OriginLeft"
    ORIGIN_RIGHT = "OriginRight"
    AIRY_A = "AiryA"
    AIRY_B = "AiryB"
    BAND_LEFT = "BandLeft"
    BAND_RIGHT = "BandRight"


class HalfPlane(str, enum.Enum):
    UPPER = "upper"
    LOWER = "lower"
    REAL = "real-axis"

    @property
    def sign(self) -> int:
        """+1 for the upper half-plane and the real axis, -1 below."""
        return -1 if self is HalfPlane.LOWER else 1


FORMULA_OF = {
    RegionTag.OUTER: "O4",
    RegionTag.STRIP_LEFT: "O1",
    RegionTag.ORIGIN_LEFT: "O0l",
    RegionTag.ORIGIN_RIGHT: "O0r",
    RegionTag.AIRY_A: "Oa",
    RegionTag.AIRY_B: "Ob",
    RegionTag.BAND_LEFT: "O2",
    RegionTag.BAND_RIGHT: "O3",
}


@dataclass(frozen=True)
class Region:
    tag: RegionTag
    half_plane: HalfPlane

    @property
    def formula(self) -> str:
        return FORMULA_OF[self.tag]

    def __str__(self):
        return self.tag.value


@dataclass(frozen=True)
class AsymptoticResult:
    """Leading-order value of ``pi_n(n z - beta/2)`` and its provenance.

    Attributes
    ----------
    value : ScaledReal or LogComplex
        ``ScaledReal`` for real ``z``, ``LogComplex`` otherwise.
    region : Region
    formula : str
        One of ``O4, O1, O0l, O0r, Oa, Ob, O2, O3``.
    err_estimate : float
        Estimated relative error: the nominal ``1/n``, the Airy-expansion
        error near the turning points, ``|D - 1|`` near the origin for
        formulas that omit ``D``, and any dropped secondary term.
    log_value : complex
        Natural logarithm of the value (upper boundary branch on cuts).
    """

    value: ScaledReal | LogComplex
    region: Region
    formula: str
    err_estimate: float
    log_value: complex


class CancellationWarning(RuntimeWarning):
    """The leading oscillatory factor is close to a zero of the polynomial."""


def default_eps_delta(tp: TurningPoints) -> tuple[float, float]:
    """Default disk radius ``eps`` and strip half-width ``delta = 2 eps``.

    ``eps = min(a, (b-a)/2, 1-a, b-1)/4`` keeps the three disks disjoint and
    inside the domains of ``F`` and ``F~``.
    """
    a, b = tp.a, tp.b
    eps = min(a, (b - a) / 2, 1 - a, b - 1) / 4
    return eps, 2 * eps


def _as_complex(z) -> complex:
    if isinstance(z, (int, float, complex)):
        return complex(z)
    with mpmath.workdps(PHASE_DPS):
        return complex(to_mpc(z))


def classify_region(z, eps: float, delta: float, tp: TurningPoints) -> Region:
    """Region containing ``z``; disks and the band are closed.

    Order of tests: the disks ``|z| <= eps``, ``|z-a| <= eps``,
    ``|z-b| <= eps``; then the rectangle ``|Im z| <= delta`` split into
    the strip ``0 < Re z < a`` and the band ``a <= Re z <= b`` (left of
    ``Re z = 1`` or not); everything else is Outer.
    """
    if not 0 < eps < delta:
        raise ValueError(f"need 0 < eps < delta, got eps={eps}, delta={delta}")
    z = _as_complex(z)
    a, b = tp.a, tp.b
    if z.imag > 0:
        hp = HalfPlane.UPPER
    elif z.imag < 0:
        hp = HalfPlane.LOWER
    else:
        hp = HalfPlane.REAL
    if abs(z) <= eps:
        tag = RegionTag.ORIGIN_LEFT if z.real <= 0 else RegionTag.ORIGIN_RIGHT
    elif abs(z - a) <= eps:
        tag = RegionTag.AIRY_A
    elif abs(z - b) <= eps:
        tag = RegionTag.AIRY_B
    elif abs(z.imag) <= delta and 0 < z.real < a:
        tag = RegionTag.STRIP_LEFT
    elif abs(z.imag) <= delta and a <= z.real <= b:
        tag = RegionTag.BAND_LEFT if z.real < 1 else RegionTag.BAND_RIGHT
    else:
        tag = RegionTag.OUTER
    return Region(tag, hp)


# --------------------------------------------------------------------------
# shared setup
# --------------------------------------------------------------------------

class _Ctx:
    """Extended-precision constants for one evaluation."""

    def __init__(self, z, params, tp, hp: HalfPlane):
        n = int(params.n)
        if n < 1:
            raise DomainError("the asymptotic formulas need n >= 1")
        self.n = n
        self.params = params
        self.tp = tp
        self.z = to_mpc(z)
        self.zc = complex(self.z)
        self.real = hp is HalfPlane.REAL
        self.s = hp.sign
        # side argument for phase functions: only needed on the axis
        self.side = self.s if self.real else None
        self.beta = mpmath.mpf(params.beta.numerator) / params.beta.denominator
        self.a, self.b, logc = tp.mp()
        lval = 2 * mpmath.log((self.b - self.a) / 4) - 2
        self.half_vl = n * (-self.z * logc + lval) / 2
        self.log_nn = n * mpmath.log(n)
        self.parity = mpmath.mpc(0, mpmath.pi) if n % 2 else mpmath.mpf(0)
        self.w = n * self.z - self.beta / 2

    def phi(self):
        return phi_mp(self.z, self.tp, self.side)

    def phi_tilde(self):
        return phi_tilde_mp(self.z, self.tp, self.side)

    def proximity(self) -> float:
        """Airy-expansion error ``(1/6)(1/(n|phi|) + 1/(n|phi~|))``."""
        out = 0.0
        for f in (self.phi, self.phi_tilde):
            val = abs(f())
            out += math.inf if val == 0 else float(1 / (6 * self.n * val))
        return out

    def d_error(self, quad_tol: float) -> float:
        """``|D(z) - 1|`` for formulas that omit ``D``."""
        if abs(self.zc) >= _D_RADIUS:
            return 0.0
        side = "left" if self.zc.real == 0 else None
        return abs(d_function(self.zc, self.params, side=side, tol=quad_tol) - 1)

    def finish(self, log_value, region: Region, err: float) -> AsymptoticResult:
        """Convert the mp logarithm into the public result."""
        log_value = mpmath.mpc(log_value)
        two_pi = 2 * mpmath.pi
        phase = log_value.imag - two_pi * mpmath.nint(log_value.imag / two_pi)
        lv = complex(mpmath.mpc(log_value.real, phase))
        if self.real:
            ratio = abs(float(mpmath.sin(phase)))
            if ratio > _REAL_TOL:
                raise MeixnerError(
                    f"{region.formula} gave a non-real value on the real axis "
                    f"(imaginary ratio {ratio:.3g})")
            re = mpmath.exp(log_value).real
            value = ScaledReal.from_decimal(Decimal(mpmath.nstr(re, 25, min_fixed=1, max_fixed=0)))
        else:
            value = LogComplex(lv.real, lv.imag)
        return AsymptoticResult(value, region, region.formula, float(err), lv)


def _check_region(z, params, tp, eps, delta, allowed) -> Region:
    if eps is None or delta is None:
        d_eps, d_delta = default_eps_delta(tp)
        eps = d_eps if eps is None else eps
        delta = d_delta if delta is None else delta
    region = classify_region(z, eps, delta, tp)
    if region.tag not in allowed:
        raise RegionError(
            f"z = {_as_complex(z)} lies in region {region.tag.value}, "
            f"not in {'/'.join(t.value for t in allowed)}")
    return region


def _warn_cancellation(name: str, size: float, err: float, z):
    if size < 10 * err:
        warnings.warn(
            f"|{name}| = {size:.3g} is below 10x the error estimate at z = {z}; "
            "the relative error bound is unreliable near a zero of the polynomial",
            CancellationWarning, stacklevel=3)


# --------------------------------------------------------------------------
# formula bodies (all return mp logarithms)
# --------------------------------------------------------------------------

def _log_o4(ctx: _Ctx):
    """``log`` of the O4 form; on ``(-inf, 0)`` the upper boundary values."""
    z, s, a, b, beta = ctx.z, ctx.s if ctx.real else 0, ctx.a, ctx.b, ctx.beta
    g = ctx.half_vl / ctx.n - ctx.phi()
    p = (_ssqrt(z - a, s) + _ssqrt(z - b, s)) / 2
    return (ctx.log_nn + ctx.n * g + (1 - beta) / 2 * _slog(z, s) + beta * mpmath.log(p)
            - (_slog(z - a, s) + _slog(z - b, s)) / 4)


def _log_o0l_body(ctx: _Ctx):
    """O0l without ``D``: the O4 form rewritten with ``-z``, ``a-z``, ``b-z``."""
    z, a, b, beta = ctx.z, ctx.a, ctx.b, ctx.beta
    g = ctx.half_vl / ctx.n - ctx.phi()
    pt = (mpmath.sqrt(b - z) + mpmath.sqrt(a - z)) / 2
    return (ctx.log_nn + ctx.n * g + (1 - beta) / 2 * mpmath.log(-z) + beta * mpmath.log(pt)
            - (mpmath.log(b - z) + mpmath.log(a - z)) / 4)


def _o1_parts(ctx: _Ctx):
    """Prefactor log, ``sin(pi w)``, and the log of the dropped-term ratio."""
    z, a, b, beta, n = ctx.z, ctx.a, ctx.b, ctx.beta, ctx.n
    pt = (mpmath.sqrt(b - z) + mpmath.sqrt(a - z)) / 2
    pref = (mpmath.log(2) + mpmath.mpc(0, mpmath.pi) + ctx.parity + ctx.log_nn + ctx.half_vl
            + (1 - beta) / 2 * mpmath.log(z) + beta * mpmath.log(pt)
            - (mpmath.log(a - z) + mpmath.log(b - z)) / 4)
    sn = mpmath.sinpi(ctx.w)
    pt_phi = ctx.phi_tilde()
    lead = pref - n * pt_phi
    if sn == 0:
        return lead, sn, mpmath.inf
    dropped = beta * mpmath.log(n) + n * ctx.phi().real + n * pt_phi.real - mpmath.log(abs(sn))
    return lead, sn, dropped


def _band_parts(ctx: _Ctx):
    """O3 prefactor log, the cosine argument and the O2 cosine argument."""
    z, a, b, beta, n, s = ctx.z, ctx.a, ctx.b, ctx.beta, ctx.n, ctx.s
    pref = (mpmath.log(2) + ctx.log_nn + ctx.half_vl + (1 - beta) / 2 * mpmath.log(z)
            + beta / 2 * mpmath.log((b - a) / 4)
            - (mpmath.log(z - a) + mpmath.log(b - z)) / 4)
    u = mpmath.acos((2 * z - a - b) / (b - a))
    ph = ctx.phi()
    arg3 = mpmath.pi / 4 - beta * u / 2 - s * 1j * n * ph
    return pref, arg3, ph, u


def _airy_common(ctx: _Ctx, root_small, root_big):
    """``P^beta + M^beta`` and ``(P^beta - M^beta)/root_small``.

    ``P, M = (root_big +- root_small)/2``; both combinations are even in
    ``root_small`` and hence analytic across the cut through the turning point.
    """
    beta = ctx.beta
    p, m = (root_big + root_small) / 2, (root_big - root_small) / 2
    even = p ** beta + m ** beta
    if abs(root_small) > mpmath.mpf(10) ** (-15) * abs(root_big):
        odd = (p ** beta - m ** beta) / root_small
    else:
        h = root_big / 2
        odd = beta * h ** (beta - 1) * (1 + (beta - 1) * (beta - 2) * root_small ** 2 / (24 * h * h))
    return even, odd


# --------------------------------------------------------------------------
# public evaluators
# --------------------------------------------------------------------------

def _setup(z, params, tp, eps, delta, allowed):
    tp = tp or turning_points(params.c)
    region = _check_region(z, params, tp, eps, delta, allowed)
    return tp, region, _Ctx(z, params, tp, region.half_plane)


def eval_outer(z, params, *, eps=None, delta=None, quad_tol: float = 1e-12,
               tp: TurningPoints | None = None) -> AsymptoticResult:
    """O4: ``n^n e^{n g} z^{(1-beta)/2} P^beta / ((z-a)^{1/4} (z-b)^{1/4})``.

    ``P = (sqrt(z-a) + sqrt(z-b))/2``.  Valid away from ``[0, b]``.  Near
    the band the neglected exponential ``e^{-2 n |Re phi|}`` is not small at
    moderate ``n`` and is added to the error estimate.
    """
    with mpmath.workdps(PHASE_DPS):
        tp, region, ctx = _setup(z, params, tp, eps, delta, {RegionTag.OUTER})
        err = 1 / ctx.n + ctx.proximity() + ctx.d_error(quad_tol)
        # the second exponential, recessive only while n |Re phi| is large
        err += float(mpmath.exp(-2 * ctx.n * abs(ctx.phi().real)))
        return ctx.finish(_log_o4(ctx), region, err)


def eval_strip_left(z, params, *, eps=None, delta=None, quad_tol: float = 1e-12,
                    tp: TurningPoints | None = None) -> AsymptoticResult:
    """O1: the oscillatory form on the saturated interval ``(0, a)``.

    ``-2 (-n)^n e^{n(v+l)/2} z^{(1-beta)/2} Pt^beta / ((a-z)^{1/4} (b-z)^{1/4})
    sin(pi w) e^{-n phi~}`` with ``w = n z - beta/2`` and
    ``Pt = (sqrt(b-z) + sqrt(a-z))/2``.  The dropped term
    ``n^beta e^{n Re phi}`` is added to the error estimate relative to the
    leading term.  Emits :class:`CancellationWarning` near polynomial zeros.
    """
    with mpmath.workdps(PHASE_DPS):
        tp, region, ctx = _setup(z, params, tp, eps, delta, {RegionTag.STRIP_LEFT})
        return _finish_o1(ctx, region, quad_tol, None)


def _finish_o1(ctx, region, quad_tol, d_value):
    lead, sn, dropped = _o1_parts(ctx)
    err = 1 / ctx.n + ctx.proximity()
    err += float(mpmath.exp(dropped)) if dropped < 700 else math.inf
    if d_value is None:
        err += ctx.d_error(quad_tol)
    _warn_cancellation("sin(n pi z - beta pi/2)", float(abs(sn)), err, ctx.zc)
    if sn == 0:
        return AsymptoticResult(ScaledReal.zero() if ctx.real else LogComplex.zero(),
                                region, region.formula, math.inf, complex(-math.inf))
    log_value = lead + mpmath.log(sn)
    if d_value is not None:
        log_value += mpmath.log(d_value)
    return ctx.finish(log_value, region, err)


def eval_origin(z, params, *, eps=None, delta=None, quad_tol: float = 1e-12,
                tp: TurningPoints | None = None) -> AsymptoticResult:
    """O0l / O0r: the origin function ``D(z)`` times the O4 or O1 form.

    Left of the imaginary axis (``Re z <= 0``) the O4 amplitude is written
    with ``(-z)``, ``(a-z)`` and ``(b-z)``; on ``Re z = 0`` the left boundary
    value of ``D`` is used.
    """
    with mpmath.workdps(PHASE_DPS):
        tp, region, ctx = _setup(z, params, tp, eps, delta,
                                 {RegionTag.ORIGIN_LEFT, RegionTag.ORIGIN_RIGHT})
        if ctx.zc == 0:
            raise DomainError("the origin formulas are singular at z = 0")
        side = "left" if ctx.zc.real == 0 else None
        d = d_function(ctx.zc, params, side=side, tol=quad_tol)
        if region.tag is RegionTag.ORIGIN_RIGHT:
            return _finish_o1(ctx, region, quad_tol, mpmath.mpc(d))
        err = 1 / ctx.n + ctx.proximity()
        return ctx.finish(_log_o0l_body(ctx) + mpmath.log(mpmath.mpc(d)), region, err)


def _airy_error(ctx, parts) -> float:
    a_part, b_part = parts
    total = abs(a_part + b_part)
    if total == 0:
        return math.inf
    return float((abs(a_part) + abs(b_part)) / total) / ctx.n


def eval_airy_a(z, params, *, eps=None, delta=None, quad_tol: float = 1e-12,
                tp: TurningPoints | None = None) -> AsymptoticResult:
    """Oa: Ai/Bi of ``F~(z)`` in the disk about ``a``.

    ``(-n)^n sqrt(pi) e^{n(v+l)/2} [A~ + B~]`` where ``A~`` carries
    ``cos(pi w) Ai(F~) - sin(pi w) Bi(F~)`` and ``B~`` the same with
    derivatives.  The amplitudes are evaluated through ``F~/(a-z)`` and
    ``(P~^beta - M~^beta)/sqrt(a-z)``, both analytic at ``a``.
    """
    with mpmath.workdps(PHASE_DPS):
        tp, region, ctx = _setup(z, params, tp, eps, delta, {RegionTag.AIRY_A})
        z, a, b, beta = ctx.z, ctx.a, ctx.b, ctx.beta
        ratio = F_tilde_ratio_mp(z, ctx.n, tp)
        f_val = (a - z) * ratio
        r14 = ratio ** mpmath.mpf(0.25)
        even, odd = _airy_common(ctx, _ssqrt(a - z, -ctx.s if ctx.real else 0), mpmath.sqrt(b - z))
        base = z ** ((beta - 1) / 2) * (b - z) ** mpmath.mpf(0.25)
        ai, aip, bi, bip = airy_mp(f_val)
        cw, sw = mpmath.cospi(ctx.w), mpmath.sinpi(ctx.w)
        a_part = even * r14 / base * (cw * ai - sw * bi)
        b_part = odd / (base * r14) * (cw * aip - sw * bip)
        total = a_part + b_part
        err = _airy_error(ctx, (a_part, b_part)) + ctx.d_error(quad_tol)
        log_value = (ctx.log_nn + ctx.parity + ctx.half_vl + mpmath.log(mpmath.sqrt(mpmath.pi))
                     + mpmath.log(total))
        return ctx.finish(log_value, region, err)


def eval_airy_b(z, params, *, eps=None, delta=None, quad_tol: float = 1e-12,
                tp: TurningPoints | None = None) -> AsymptoticResult:
    """Ob: Ai/Ai' of ``F(z)`` in the disk about ``b``.

    ``n^n sqrt(pi) e^{n(v+l)/2} [A + B]`` with ``A ~ Ai(F)`` and
    ``B ~ -Ai'(F)``; amplitudes evaluated through ``F/(z-b)`` as in
    :func:`eval_airy_a`.
    """
    with mpmath.workdps(PHASE_DPS):
        tp, region, ctx = _setup(z, params, tp, eps, delta, {RegionTag.AIRY_B})
        z, a, b, beta = ctx.z, ctx.a, ctx.b, ctx.beta
        ratio = F_ratio_mp(z, ctx.n, tp)
        f_val = (z - b) * ratio
        r14 = ratio ** mpmath.mpf(0.25)
        even, odd = _airy_common(ctx, _ssqrt(z - b, ctx.s if ctx.real else 0), mpmath.sqrt(z - a))
        base = z ** ((beta - 1) / 2) * (z - a) ** mpmath.mpf(0.25)
        ai, aip, _, _ = airy_mp(f_val)
        a_part = even * r14 / base * ai
        b_part = -odd / (base * r14) * aip
        err = _airy_error(ctx, (a_part, b_part))
        log_value = (ctx.log_nn + ctx.half_vl + mpmath.log(mpmath.sqrt(mpmath.pi))
                     + mpmath.log(a_part + b_part))
        return ctx.finish(log_value, region, err)


def band_forms(z, params, *, eps=None, delta=None,
               tp: TurningPoints | None = None) -> tuple[complex, complex]:
    """Logarithms of the O2 and O3 leading terms at a band point.

    The two are analytically identical; their difference measures rounding
    in the phase functions.
    """
    with mpmath.workdps(PHASE_DPS):
        tp, region, ctx = _setup(z, params, tp, eps, delta,
                                 {RegionTag.BAND_LEFT, RegionTag.BAND_RIGHT})
        log3, log2 = _band_logs(ctx)
        return complex(log2), complex(log3)


def _band_logs(ctx):
    pref, arg3, _, u = _band_parts(ctx)
    beta, n, s = ctx.beta, ctx.n, ctx.s
    arg2 = (mpmath.pi * ctx.w + mpmath.pi / 4 + beta * (mpmath.pi - u) / 2
            - s * 1j * n * ctx.phi_tilde())
    return pref + mpmath.log(mpmath.cos(arg3)), pref + ctx.parity + mpmath.log(mpmath.cos(arg2))


def eval_band(z, params, *, eps=None, delta=None, quad_tol: float = 1e-12,
              tp: TurningPoints | None = None, check_o2: bool = False) -> AsymptoticResult:
    """O2/O3 on and near the oscillatory interval ``(a, b)``.

    Computes ``2 n^n e^{n(v+l)/2} z^{(1-beta)/2} ((b-a)/4)^{beta/2}
    / ((z-a)^{1/4} (b-z)^{1/4}) cos(pi/4 - beta u/2 -+ i n phi)`` with
    ``z = ((b-a)/2) cos u + (b+a)/2``.  The dropped term
    ``n^{-1} e^{n |Re phi|}`` enters the error estimate.  With ``check_o2``
    the O2 form is evaluated too and must agree to ``1e-9`` relative.
    """
    with mpmath.workdps(PHASE_DPS):
        tp, region, ctx = _setup(z, params, tp, eps, delta,
                                 {RegionTag.BAND_LEFT, RegionTag.BAND_RIGHT})
        pref, arg3, ph, _ = _band_parts(ctx)
        cs = mpmath.cos(arg3)
        log_value = pref + mpmath.log(cs)
        size = float(abs(cs))
        err = 1 / ctx.n + ctx.proximity() + ctx.d_error(quad_tol)
        err += float(mpmath.exp(ctx.n * abs(ph.real)) / ctx.n) / size if size else math.inf
        if check_o2:
            log3, log2 = _band_logs(ctx)
            diff = abs(mpmath.expm1(log2 - log3))
            if diff > _O2_O3_TOL:
                raise MeixnerError(f"O2 and O3 differ by {float(diff):.3g} at z = {ctx.zc}")
        _warn_cancellation("cos(pi/4 - beta u/2 -+ i n phi)", size, err, ctx.zc)
        return ctx.finish(log_value, region, err)


_DISPATCH = {
    RegionTag.OUTER: eval_outer,
    RegionTag.STRIP_LEFT: eval_strip_left,
    RegionTag.ORIGIN_LEFT: eval_origin,
    RegionTag.ORIGIN_RIGHT: eval_origin,
    RegionTag.AIRY_A: eval_airy_a,
    RegionTag.AIRY_B: eval_airy_b,
    RegionTag.BAND_LEFT: eval_band,
    RegionTag.BAND_RIGHT: eval_band,
}


def evaluate(z, params, eps: float | None = None, delta: float | None = None,
             quad_tol: float = 1e-12) -> AsymptoticResult:
    """Classify ``z`` and apply the matching formula.

    Parameters
    ----------
    z : complex, str, Fraction or GaussianRational
        Exact inputs keep their full precision in the phase ``n pi z``.
    params : MeixnerParams
    eps, delta : float, optional
        Disk radius and strip half-width; defaults from :func:`default_eps_delta`.
    quad_tol : float
        Absolute tolerance for the ``D`` quadrature.
    """
    tp = turning_points(params.c)
    d_eps, d_delta = default_eps_delta(tp)
    eps = d_eps if eps is None else eps
    delta = d_delta if delta is None else delta
    region = classify_region(z, eps, delta, tp)
    fn = _DISPATCH[region.tag]
    return fn(z, params, eps=eps, delta=delta, quad_tol=quad_tol, tp=tp)
