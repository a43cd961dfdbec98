"""Identity suites that check the implementation against exact relations.

Each suite evaluates one identity at a handful of points and records the
largest residual together with its tolerance.  :func:`run_verify` runs them
all; the CLI ``verify`` command prints the report.

``fault="flip-phi-tilde"`` replaces ``phi~`` by ``-phi~`` inside the suites
that use it, which must make them fail (a mutation check of the harness).
"""
from __future__ import annotations

import cmath
import math
import time
import warnings
from dataclasses import dataclass, field
from typing import Callable

import mpmath

from .asymptotics import CancellationWarning, band_forms, default_eps_delta, evaluate
from .equilibrium import (
    PHASE_DPS,
    g_direct,
    g_prime,
    lagrange_l,
    phi,
    phi_tilde,
    rho,
    turning_points,
    v_linear,
)
from .exact import MeixnerParams
from .numerics import rel_diff
from .quadrature import integrate
from .specfun.airy import airy_mp, connection_check
from .specfun.auxiliary import L_estimate, big_l, e_function, e_tilde, h_log, h_tilde_log
from .specfun.dfunc import d_function

__all__ = ["CheckResult", "VerifyReport", "FAULTS", "SUITES", "run_verify",
           "OverlapPair", "overlap_pairs", "overlap_ratio"]

FAULTS = ("flip-phi-tilde",)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    residual: float
    tol: float
    points: int
    seconds: float = 0.0
    note: str = ""

    @property
    def passed(self) -> bool:
        return math.isfinite(self.residual) and self.residual <= self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  {self.note}" if self.note else ""
        return (f"{status}  {self.suite:<22s} residual={self.residual:.3e}  "
                f"tol={self.tol:.1e}  points={self.points}{extra}")


@dataclass
class VerifyReport:
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        return [r.line() for r in self.results]


class _Env:
    """Parameters shared by the suites plus the (possibly faulted) phi~."""

    def __init__(self, params: MeixnerParams, fault: str | None):
        self.params = params
        self.tp = turning_points(params.c)
        self.fault = fault
        a, b = self.tp.a, self.tp.b
        # sample abscissae on the saturated interval, the band and the void
        self.sat = tuple(a * f for f in (0.1, 0.5, 0.9))
        self.band = tuple(a + (b - a) * f for f in (0.06, 0.15, 0.4, 0.9))
        self.void = (1.05 * b, 1.7 * b)

    def phi_tilde(self, z, side=None) -> complex:
        val = phi_tilde(z, self.tp, side)
        return -val if self.fault == "flip-phi-tilde" else val


def _max(values) -> tuple[float, int]:
    values = list(values)
    return max(values), len(values)


# --------------------------------------------------------------------------
# equilibrium suites
# --------------------------------------------------------------------------

def _jog1(env):
    return _max(abs(g_prime(x, env.tp, "upper") - g_prime(x, env.tp, "lower") + 2j * math.pi)
                for x in env.sat)


def _jog2(env):
    return _max(abs(g_prime(x, env.tp, "upper") + g_prime(x, env.tp, "lower") + env.tp.log_c)
                for x in env.band)


def _phi_pm(env):
    tp = env.tp
    res = []
    for x in env.sat:
        res.append(abs(phi(x, tp, 1) - phi(x, tp, -1) + 2j * math.pi * (1 - x)))
    for x in env.band:
        res.append(abs(phi(x, tp, 1) + phi(x, tp, -1)))
    for x in env.void:
        res.append(abs(phi(x, tp, 1) - phi(x, tp, -1)))
    return _max(res)


def _phi_tilde_pm(env):
    pt = env.phi_tilde
    res = []
    for x in env.sat:
        res.append(abs(pt(x, 1) - pt(x, -1)))
    for x in env.band:
        res.append(abs(pt(x, 1) + pt(x, -1)))
    for x in env.void:
        res.append(abs(pt(x, 1) - pt(x, -1) - 2j * math.pi * (1 - x)))
    return _max(res)


def _gphi(env):
    # g from direct quadrature of the log potential, phi from its closed form
    tp = env.tp
    ell = lagrange_l(tp)
    a, b = tp.a, tp.b
    pts = (b + 0.2 + 0.5j, (a + b) / 2 + 1j, -1 + 0.3j, a / 2 - 0.2j, 2 * b)
    return _max(abs(2 * g_direct(z, tp) + 2 * phi(z, tp) - v_linear(z, tp) - ell) for z in pts)


def _g_jump(env):
    tp = env.tp
    res = []
    for x in env.sat[1:]:
        jump = g_direct(x, tp, 1) - g_direct(x, tp, -1)
        res.append(abs(jump - 2j * math.pi * (1 - x)))
    for x in env.band[1:3]:
        jump = g_direct(x, tp, 1) - g_direct(x, tp, -1)
        res.append(abs(jump + 2 * phi(x, tp, 1)))
    return _max(res)


def _local_ratio(residual, radius):
    """Growth of ``C(r) = max |remainder| / r^2`` as ``r`` shrinks.

    An ``O(r^2)`` remainder keeps the ratio ``C(r) / C(r_max)`` at or below
    about one; a wrong leading term makes it grow like ``r^(-1/2)``.
    """
    cs = []
    for r in (radius * 5e-2, radius * 5e-3, radius * 5e-4):
        cs.append(max(residual(r * cmath.exp(1j * th)) for th in (0.3, 2.0, -1.2)) / r ** 2)
    return max(c / cs[0] for c in cs[1:]), 3 * len(cs)


def _local_b(env):
    """``phi(z) - 4 (z-b)^{3/2}/(3 b sqrt(b-a))`` must be ``O(eps^2)``."""
    a, b = env.tp.a, env.tp.b
    k = 4 / (3 * b * math.sqrt(b - a))
    return _local_ratio(lambda t: abs(phi(b + t, env.tp) - k * t ** 1.5), env.tp.radius_b)


def _local_a(env):
    a, b = env.tp.a, env.tp.b
    k = -4 / (3 * a * math.sqrt(b - a))
    return _local_ratio(lambda t: abs(env.phi_tilde(a - t) - k * t ** 1.5), env.tp.radius_a)


def _density_mass(env):
    a, b = env.tp.a, env.tp.b
    mass = a + integrate(lambda x: rho(x.real, env.tp), a, b, abs_tol=1e-12)
    return abs(mass - 1), 1


# --------------------------------------------------------------------------
# auxiliary-function suites
# --------------------------------------------------------------------------

def _e_ratio(env):
    p = env.params
    n, beta = p.n, float(p.beta)
    res = []
    for z in (0.3 + 0.2j, 2 - 0.1j, -0.5 + 0.05j, 0.7 + 1e-3j):
        s = 1 if z.imag > 0 else -1
        w = n * z - beta / 2
        with mpmath.workdps(30):
            target = complex(1 - mpmath.expjpi(2 * s * mpmath.mpc(w)))
        ratio = e_function(z, p) / e_tilde(z, p)
        res.append(abs(ratio - target) / abs(target))
    return _max(res)


def _e_plus_minus(env):
    p = env.params
    n, beta = p.n, float(p.beta)
    res = []
    for x0 in (0.3, 0.55, 0.77):
        # midway between neighbouring nodes, where both sides are finite
        x = (math.floor(n * x0) + 0.5 + beta / 2) / n
        ep, em = e_function(x, p, 1), e_function(x, p, -1)
        sn = math.sin(math.pi * (n * x - beta / 2))
        rhs = ep * em / (4 * sn * sn)
        for side in (1, -1):
            et = e_tilde(x, p, side)
            res.append(abs(et * et - rhs) / abs(rhs))
    return _max(res)


def _h_ratio(env):
    p = env.params
    beta = float(p.beta)
    res = []
    for z in (0.4 + 0.1j, 0.6 - 0.2j, 0.9 + 0.01j):
        s = 1 if z.imag > 0 else -1
        lh, lht = h_log(z, p).log(), h_tilde_log(z, p).log()
        target = cmath.exp(lht - lh)
        res.append(abs(target + cmath.exp(-s * 1j * math.pi * beta)))
    return _max(res)


def _jot00(env):
    """``-e^{2n(phi - phi~)} H~/(H E) + 1/E~ = 1/E`` off the real axis."""
    p, tp = env.params, env.tp
    n = p.n
    res = []
    a, b = tp.a, tp.b
    for z in ((a + 1) / 2 + 0.05j, (1 + b) / 2 + 0.02j, a / 2 - 0.03j, (a + b) / 2 - 0.1j):
        e, et = e_function(z, p), e_tilde(z, p)
        expo = (2 * n * (phi(z, tp) - env.phi_tilde(z)) + h_tilde_log(z, p).log()
                - h_log(z, p).log())
        try:
            first = -cmath.exp(expo) / e
        except OverflowError:
            first = complex(math.inf)
        res.append(abs(first + 1 / et - 1 / e) * abs(e))
    return _max(res)


def _d_jump(env):
    p = env.params
    n, beta = p.n, float(p.beta)
    res = []
    for y in (0.005, -0.005, 0.02, -0.02, 0.2, -0.2):
        z = 1j * y
        s = 1 if y > 0 else -1
        w = n * z - beta / 2
        with mpmath.workdps(30):
            ratio = complex(1 - mpmath.expjpi(2 * s * mpmath.mpc(w)))
        left = d_function(z, p, side="left")
        right = d_function(z, p, side="right")
        res.append(abs(left - right * ratio) / abs(left))
    return _max(res)


def _l_estimate(env):
    p = env.params
    diff = abs(big_l(p) - L_estimate(p))
    return diff * p.n, 1


# --------------------------------------------------------------------------
# Airy and asymptotic suites
# --------------------------------------------------------------------------

def _airy_wronskian(env):
    res = []
    with mpmath.workdps(25):
        for z in (0, 1.5, -3, 2 + 2j, -8 + 1j, 12, -15, 4 - 9j):
            ai, aip, bi, bip = airy_mp(z)
            res.append(float(abs((ai * bip - aip * bi) * mpmath.pi - 1)))
    return _max(res)


def _airy_connection(env):
    # connection_check is absolute; scale by |Ai| + |Bi| at the point
    res = []
    with mpmath.workdps(25):
        for z in (0, 1, -2, 3 + 1j, -6 - 2j, 11):
            ai, _, bi, _ = airy_mp(z)
            res.append(connection_check(z) / float(abs(ai) + abs(bi)))
    return _max(res)


def _o2_o3(env):
    p = env.params
    res = []
    a, b = env.tp.a, env.tp.b
    _, delta = default_eps_delta(env.tp)
    pts = [1 + 0.25j * delta, 1 - 0.25j * delta]
    pts += [a + (b - a) * f + 1j * delta * g for f, g in ((0.3, 0), (0.5, 0.5), (0.8, 0), (0.2, -0.3))]
    for z in pts:
        log2, log3 = band_forms(z, p)
        res.append(abs(cmath.exp(log2 - log3) - 1))
    return _max(res)


def _realness(env):
    p = env.params
    res = []
    a, b = env.tp.a, env.tp.b
    eps, _ = default_eps_delta(env.tp)
    # one point per formula: O4, O0l, O0r, O1, Oa, O2, O3, Ob, O4
    pts = (-1.0, -eps / 40, eps / 40, a / 2, a - eps / 200, (a + 1) / 2, (1 + b) / 2,
           b - eps / 100, 2 * b)
    for z in pts:
        r = evaluate(z, p)
        res.append(abs(math.sin(r.log_value.imag)))
    return _max(res)


# --------------------------------------------------------------------------
# overlap of neighbouring regions
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class OverlapPair:
    """Two points a distance ``~2 h r`` apart on either side of a region edge."""

    name: str
    inner: complex
    outer: complex


def overlap_pairs(params: MeixnerParams, eps=None, delta=None, h: float = 1e-6):
    """Twenty straddling pairs covering every edge of the region geometry.

    Disk edges are crossed radially; the strip/band/outer edges along the
    coordinate that changes region.  The crossing of the ``a`` disk into the
    strip is taken off the axis (at 160 degrees): on the axis the sine of the
    strip formula nearly vanishes and the comparison says nothing.
    """
    tp = turning_points(params.c)
    d_eps, d_delta = default_eps_delta(tp)
    eps = d_eps if eps is None else eps
    delta = d_delta if delta is None else delta
    a, b = tp.a, tp.b

    def radial(name, centre, degrees):
        if degrees == 90:
            u = 1j
        else:
            u = cmath.exp(1j * math.radians(degrees))
        return OverlapPair(name, centre + eps * (1 - h) * u, centre + eps * (1 + h) * u)

    def across(name, z0, step):
        return OverlapPair(name, z0 - h * step, z0 + h * step)

    return [
        radial("origin/outer left", 0, 180),
        radial("origin/outer top", 0, 90),
        radial("origin/strip right", 0, 0),
        radial("origin/strip 45", 0, 45),
        radial("origin/strip -45", 0, -45),
        radial("airyA/strip 160", a, 160),
        radial("airyA/strip 120", a, 120),
        radial("airyA/band", a, 0),
        radial("airyA/band top", a, 90),
        radial("airyA/band -60", a, -60),
        radial("airyB/band", b, 180),
        radial("airyB/band top", b, 90),
        radial("airyB/outer", b, 0),
        radial("airyB/outer 45", b, 45),
        across("band/outer", complex((1 + b) / 2, delta), 1j),
        across("band/outer lower", complex((a + 1) / 2, -delta), -1j),
        across("strip/outer", complex(a / 2, delta), 1j),
        across("bandL/bandR", complex(1, delta / 4), 1),
        across("strip/band", complex(a, 0.8 * delta), 1),
        across("strip/outer Re=0", complex(0, 0.7 * delta), -1),
    ]


def overlap_ratio(pair: OverlapPair, params: MeixnerParams, eps=None, delta=None):
    """``rel_diff / (3 x combined err_estimate)`` and the two results."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CancellationWarning)
        ri = evaluate(pair.inner, params, eps, delta)
        ro = evaluate(pair.outer, params, eps, delta)
    d = rel_diff(ri.value, ro.value)
    return d / (3 * (ri.err_estimate + ro.err_estimate)), ri, ro


def _overlap(env):
    p = env.params
    return _max(overlap_ratio(pr, p)[0] for pr in overlap_pairs(p))


SUITES: dict[str, tuple[Callable, float]] = {
    "g' jump on (0,a)": (_jog1, 1e-8),
    "g' sum on (a,b)": (_jog2, 1e-8),
    "phi boundary values": (_phi_pm, 1e-9),
    "phi~ boundary values": (_phi_tilde_pm, 1e-9),
    "g + phi identity": (_gphi, 1e-9),
    "g jump": (_g_jump, 1e-9),
    "phi near b": (_local_b, 1.0),
    "phi~ near a": (_local_a, 1.0),
    "density mass": (_density_mass, 1e-9),
    "E/E~ exact form": (_e_ratio, 1e-12),
    "E~^2 = E+E-/4sin^2": (_e_plus_minus, 1e-9),
    "H~/H": (_h_ratio, 1e-12),
    "E,E~,H,H~ jump": (_jot00, 1e-8),
    "D jump": (_d_jump, 1e-8),
    "L vs leading form": (_l_estimate, 1.0),
    "Airy Wronskian": (_airy_wronskian, 1e-12),
    "Airy connection": (_airy_connection, 1e-12),
    "O2 = O3": (_o2_o3, 1e-9),
    "realness on axis": (_realness, 1e-8),
    "region overlap": (_overlap, 1.0),
}


def _d_decay(n_values, params) -> CheckResult:
    """``max |D - 1|`` over a few points must decrease as ``n`` grows."""
    pts = (0.05, -0.1, 0.2j + 0.01)
    start = time.perf_counter()
    sizes = []
    for n in sorted(n_values):
        p = params.with_n(n)
        sizes.append(max(abs(d_function(z, p) - 1) for z in pts))
    worst = max((sizes[i + 1] / sizes[i] for i in range(len(sizes) - 1)), default=0.0)
    note = "max|D-1| = " + ", ".join(f"{s:.2e}" for s in sizes)
    return CheckResult("D -> 1 as n grows", worst, 1.0 - 1e-12, len(pts) * len(sizes),
                       time.perf_counter() - start, note)


def run_verify(params: MeixnerParams, fault: str | None = None,
               n_values=None, suites=None) -> VerifyReport:
    """Run the identity suites for ``params``.

    Parameters
    ----------
    params : MeixnerParams
    fault : {None, "flip-phi-tilde"}
        Deliberate mutation used to check that the suites can fail.
    n_values : sequence of int, optional
        With two or more values the decay of ``D - 1`` in ``n`` is checked too.
    suites : iterable of str, optional
        Subset of :data:`SUITES` to run.
    """
    if fault is not None and fault not in FAULTS:
        raise ValueError(f"unknown fault {fault!r}; choose from {FAULTS}")
    env = _Env(params, fault)
    report = VerifyReport()
    names = list(SUITES) if suites is None else list(suites)
    with mpmath.workdps(PHASE_DPS), warnings.catch_warnings():
        warnings.simplefilter("ignore", CancellationWarning)
        for name in names:
            fn, tol = SUITES[name]
            start = time.perf_counter()
            try:
                residual, count = fn(env)
                note = ""
            except (ArithmeticError, ValueError) as exc:
                residual, count, note = math.inf, 0, f"error: {exc}"
            report.results.append(
                CheckResult(name, float(residual), tol, count, time.perf_counter() - start, note))
    if n_values is not None and len(set(n_values)) >= 2:
        report.results.append(_d_decay(set(n_values), params))
    return report
