"""Exact rationals, scaled real/complex numbers and log-gamma.

Values of the Meixner polynomials at n = 100 reach 10**400, beyond the
range of IEEE doubles.  Two representations are used throughout:

* :class:`ScaledReal` keeps a sign, a decimal mantissa string and an integer
  base-10 exponent, so printed digits are never limited by the storage.
* :class:`LogComplex` keeps ``log|w|`` and ``arg w``, which turns products of
  huge factors into sums.

Exact rationals are :class:`fractions.Fraction`; :class:`GaussianRational`
adds an imaginary part.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from decimal import Decimal, Context, ROUND_HALF_EVEN
from fractions import Fraction
from numbers import Rational

import mpmath
import numpy as np

from .errors import PoleError

__all__ = [
    "GaussianRational",
    "ScaledReal",
    "LogComplex",
    "to_fraction",
    "to_gaussian",
    "from_big_rational",
    "scaled_mul",
    "scaled_add",
    "rel_diff",
    "wrap_phase",
    "log_gamma",
    "digamma",
    "to_mpc",
]

MANTISSA_DIGITS = 20
_DEC = Context(prec=40, Emax=10**9, Emin=-(10**9), rounding=ROUND_HALF_EVEN)
_TWO_PI = 2.0 * math.pi
_LN10 = math.log(10.0)


# --------------------------------------------------------------------------
# exact rationals
# --------------------------------------------------------------------------

def to_fraction(x) -> Fraction:
    """Convert an int, Fraction, decimal string or float to a Fraction.

    Strings are parsed exactly (``"0.171"`` becomes ``171/1000``), floats are
    converted to the exact binary value they hold.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, Decimal):
        return Fraction(x)
    if isinstance(x, (float, np.floating)):
        return Fraction(float(x))
    raise TypeError(f"cannot convert {type(x).__name__} to Fraction")


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex rational ``re + i*im``."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", to_fraction(self.re))
        object.__setattr__(self, "im", to_fraction(self.im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = to_gaussian(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = to_gaussian(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return to_gaussian(other) - self

    def __mul__(self, other):
        o = to_gaussian(other)
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = to_gaussian(other)
        d = o.norm2()
        if d == 0:
            raise ZeroDivisionError("division by exact zero")
        return GaussianRational((self.re * o.re + self.im * o.im) / d,
                                (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        return to_gaussian(other) / self

    def __eq__(self, other):
        try:
            o = to_gaussian(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


def to_gaussian(x) -> GaussianRational:
    """Convert a real or complex exact-ish input to :class:`GaussianRational`."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (complex, np.complexfloating)):
        return GaussianRational(Fraction(x.real), Fraction(x.imag))
    if isinstance(x, tuple) and len(x) == 2:
        return GaussianRational(to_fraction(x[0]), to_fraction(x[1]))
    return GaussianRational(to_fraction(x), Fraction(0))


def to_mpc(z) -> mpmath.mpc:
    """Convert a number (exact or floating) to an mpmath complex.

    Exact inputs are rounded once at the current mpmath precision, which
    keeps arguments like ``n*z - beta/2`` accurate far beyond double.
    """
    if isinstance(z, GaussianRational):
        return mpmath.mpc(_frac_to_mpf(z.re), _frac_to_mpf(z.im))
    if isinstance(z, (Fraction, int)):
        return mpmath.mpc(_frac_to_mpf(Fraction(z)))
    if isinstance(z, (str, tuple, Decimal)):
        return to_mpc(to_gaussian(z))
    return mpmath.mpc(z)


def _frac_to_mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


# --------------------------------------------------------------------------
# ScaledReal
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ScaledReal:
    """Real number stored as ``sign * mantissa * 10**exponent``.

    ``mantissa`` is a decimal string in ``[1, 10)`` with
    :data:`MANTISSA_DIGITS` significant digits.  Zero has ``sign == 0``.
    """

    sign: int
    mantissa: str = "0"
    exponent: int = 0

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError("sign must be -1, 0 or +1")
        if self.sign == 0:
            object.__setattr__(self, "mantissa", "0")
            object.__setattr__(self, "exponent", 0)

    # construction ---------------------------------------------------------
    @classmethod
    def zero(cls) -> ScaledReal:
        return cls(0)

    @classmethod
    def from_decimal(cls, d: Decimal) -> ScaledReal:
        if d.is_zero():
            return cls(0)
        if not d.is_finite():
            raise ValueError("non-finite value")
        sign = -1 if d.is_signed() else 1
        d = abs(d)
        e = d.adjusted()
        m = d.scaleb(-e, _DEC)
        q = Decimal(1).scaleb(1 - MANTISSA_DIGITS)
        m = m.quantize(q, context=_DEC)
        if m >= 10:
            m = (m / 10).quantize(q, context=_DEC)
            e += 1
        return cls(sign, format(m, "f"), e)

    @classmethod
    def from_fraction(cls, x: Fraction) -> ScaledReal:
        x = to_fraction(x)
        if x == 0:
            return cls(0)
        d = _DEC.divide(Decimal(x.numerator), Decimal(x.denominator))
        return cls.from_decimal(d)

    @classmethod
    def from_log10(cls, sign: int, log10_mag: float) -> ScaledReal:
        """Build from a sign and ``log10|x|`` (double precision)."""
        if sign == 0:
            return cls(0)
        if not math.isfinite(log10_mag):
            raise ValueError("log10 magnitude must be finite")
        e = math.floor(log10_mag)
        m = 10.0 ** (log10_mag - e)
        if m >= 10.0:
            m /= 10.0
            e += 1
        return cls.from_decimal((Decimal(repr(m)) * sign).scaleb(e))

    @classmethod
    def from_float(cls, x: float) -> ScaledReal:
        if x == 0:
            return cls(0)
        return cls.from_decimal(Decimal(repr(float(x))))

    # views -----------------------------------------------------------------
    @property
    def log10_mag(self) -> float:
        if self.sign == 0:
            return -math.inf
        return self.exponent + math.log10(float(self.mantissa))

    def to_decimal(self) -> Decimal:
        if self.sign == 0:
            return Decimal(0)
        return (Decimal(self.mantissa) * self.sign).scaleb(self.exponent)

    def to_logcomplex(self) -> LogComplex:
        if self.sign == 0:
            return LogComplex.zero()
        return LogComplex(self.log10_mag * _LN10, 0.0 if self.sign > 0 else math.pi)

    def __float__(self):
        return float(self.to_decimal())

    def format(self, digits: int = 6) -> str:
        """Render as e.g. ``1.99529e233`` with ``digits`` significant digits."""
        if self.sign == 0:
            return "0"
        d = self.to_decimal()
        return f"{d:.{digits - 1}e}".replace("e+", "e")

    def __str__(self):
        return self.format(6)

    # arithmetic ------------------------------------------------------------
    def __neg__(self):
        return ScaledReal(-self.sign, self.mantissa, self.exponent)

    def __abs__(self):
        return ScaledReal(abs(self.sign), self.mantissa, self.exponent)

    def __mul__(self, other):
        if not isinstance(other, ScaledReal):
            return NotImplemented
        return ScaledReal.from_decimal(_DEC.multiply(self.to_decimal(), other.to_decimal()))

    def __truediv__(self, other):
        if not isinstance(other, ScaledReal):
            return NotImplemented
        if other.sign == 0:
            raise ZeroDivisionError("division by zero ScaledReal")
        return ScaledReal.from_decimal(_DEC.divide(self.to_decimal(), other.to_decimal()))

    def __add__(self, other):
        if not isinstance(other, ScaledReal):
            return NotImplemented
        return scaled_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, ScaledReal):
            return NotImplemented
        return scaled_add(self, -other)


# --------------------------------------------------------------------------
# LogComplex
# --------------------------------------------------------------------------

def wrap_phase(p: float) -> float:
    """Reduce an angle to the half-open interval ``(-pi, pi]``."""
    r = math.remainder(p, _TWO_PI)
    if r <= -math.pi:
        r += _TWO_PI
    return r


@dataclass(frozen=True)
class LogComplex:
    """Complex number ``exp(log_mag + i*phase)``; zero has ``log_mag = -inf``."""

    log_mag: float
    phase: float = 0.0

    def __post_init__(self):
        lm = float(self.log_mag)
        if math.isnan(lm) or lm == math.inf:
            raise ValueError("log magnitude must be finite or -inf")
        object.__setattr__(self, "log_mag", lm)
        object.__setattr__(self, "phase", 0.0 if lm == -math.inf else wrap_phase(float(self.phase)))

    @classmethod
    def zero(cls) -> LogComplex:
        return cls(-math.inf, 0.0)

    @classmethod
    def from_log(cls, w) -> LogComplex:
        """Exponentiate a complex logarithm ``w`` symbolically."""
        w = complex(w)
        return cls(w.real, w.imag)

    @classmethod
    def from_complex(cls, w) -> LogComplex:
        w = complex(w)
        if w == 0:
            return cls.zero()
        return cls(math.log(abs(w)), cmath.phase(w))

    @property
    def is_zero(self) -> bool:
        return self.log_mag == -math.inf

    @property
    def log10_mag(self) -> float:
        return self.log_mag / _LN10

    def log(self) -> complex:
        if self.is_zero:
            raise PoleError("log of zero")
        return complex(self.log_mag, self.phase)

    def to_complex(self) -> complex:
        """Ordinary complex value (overflows to inf beyond ~1e308)."""
        if self.is_zero:
            return 0j
        return cmath.rect(math.exp(self.log_mag), self.phase) if self.log_mag < 709.7 else complex(
            math.copysign(math.inf, math.cos(self.phase)), math.copysign(math.inf, math.sin(self.phase)))

    __complex__ = to_complex

    def real_part(self) -> ScaledReal:
        """Real part as a :class:`ScaledReal`."""
        c = math.cos(self.phase)
        if self.is_zero or c == 0.0:
            return ScaledReal.zero()
        return ScaledReal.from_log10(1 if c > 0 else -1, (self.log_mag + math.log(abs(c))) / _LN10)

    def imag_ratio(self) -> float:
        """``|Im w| / |w|``, used to check realness of results."""
        return abs(math.sin(self.phase))

    def conjugate(self) -> LogComplex:
        return LogComplex(self.log_mag, -self.phase)

    def __neg__(self):
        return LogComplex(self.log_mag, self.phase + math.pi)

    def __mul__(self, other):
        o = _as_logcomplex(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return LogComplex.zero()
        return LogComplex(self.log_mag + o.log_mag, self.phase + o.phase)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _as_logcomplex(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero LogComplex")
        if self.is_zero:
            return LogComplex.zero()
        return LogComplex(self.log_mag - o.log_mag, self.phase - o.phase)

    def __add__(self, other):
        o = _as_logcomplex(other)
        if o is None:
            return NotImplemented
        return scaled_add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = _as_logcomplex(other)
        if o is None:
            return NotImplemented
        return scaled_add(self, -o)

    def __str__(self):
        if self.is_zero:
            return "0"
        return f"exp({self.log_mag:.15g} {'+' if self.phase >= 0 else '-'} {abs(self.phase):.15g}i)"


def _as_logcomplex(x):
    if isinstance(x, LogComplex):
        return x
    if isinstance(x, ScaledReal):
        return x.to_logcomplex()
    if isinstance(x, (int, float, complex)):
        return LogComplex.from_complex(x)
    return None


# --------------------------------------------------------------------------
# generic helpers
# --------------------------------------------------------------------------

def from_big_rational(x):
    """Convert an exact rational (real or Gaussian) to scaled form.

    Real inputs give a :class:`ScaledReal`, complex ones a :class:`LogComplex`.
    """
    g = to_gaussian(x)
    if g.is_real:
        return ScaledReal.from_fraction(g.re)
    n2 = ScaledReal.from_fraction(g.norm2())
    log_mag = 0.5 * (n2.exponent * _LN10 + math.log(float(n2.mantissa)))
    s = max(abs(g.re), abs(g.im))
    phase = math.atan2(float(g.im / s), float(g.re / s))
    return LogComplex(log_mag, phase)


def scaled_mul(a, b):
    """Product of two scaled numbers without overflow."""
    if isinstance(a, ScaledReal) and isinstance(b, ScaledReal):
        return a * b
    return _as_logcomplex(a) * _as_logcomplex(b)


def scaled_add(a, b):
    """Sum of two scaled numbers, factoring out the larger magnitude."""
    if isinstance(a, ScaledReal) and isinstance(b, ScaledReal):
        if a.sign == 0:
            return b
        if b.sign == 0:
            return a
        if a.sign == -b.sign and a.exponent == b.exponent and a.mantissa == b.mantissa:
            return ScaledReal.zero()
        return ScaledReal.from_decimal(_DEC.add(a.to_decimal(), b.to_decimal()))
    a, b = _as_logcomplex(a), _as_logcomplex(b)
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if b.log_mag > a.log_mag:
        a, b = b, a
    ratio = cmath.rect(math.exp(b.log_mag - a.log_mag), b.phase - a.phase)
    s = 1.0 + ratio
    if s == 0:
        return LogComplex.zero()
    return LogComplex(a.log_mag + math.log(abs(s)), a.phase + cmath.phase(s))


def rel_diff(a, b) -> float:
    """``|a/b - 1|`` for scaled numbers, computed without overflow."""
    if isinstance(a, ScaledReal) and isinstance(b, ScaledReal):
        if b.sign == 0:
            raise ZeroDivisionError("relative difference to zero")
        q = _DEC.divide(a.to_decimal(), b.to_decimal()) - 1
        return float(abs(q))
    a, b = _as_logcomplex(a), _as_logcomplex(b)
    if b.is_zero:
        raise ZeroDivisionError("relative difference to zero")
    if a.is_zero:
        return 1.0
    dr = a.log_mag - b.log_mag
    di = wrap_phase(a.phase - b.phase)
    # exp(dr + i di) - 1 without cancellation
    re = math.expm1(dr) * math.cos(di) - 2.0 * math.sin(0.5 * di) ** 2
    im = math.exp(dr) * math.sin(di)
    return math.hypot(re, im)


# --------------------------------------------------------------------------
# log-gamma and digamma
# --------------------------------------------------------------------------

# B_2, B_4, ..., B_30
_BERNOULLI = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
              Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
              Fraction(43867, 798), Fraction(-174611, 330), Fraction(854513, 138),
              Fraction(-236364091, 2730), Fraction(8553103, 6), Fraction(-23749461029, 870),
              Fraction(8615841276005, 14322)]

_SHIFT = 20
_LOGGAMMA_DPS = 34


def _stirling_loggamma(w):
    """Stirling series for log Gamma(w), |w| >= 20, Re w > 0 (mpmath)."""
    s = (w - 0.5) * mpmath.log(w) - w + mpmath.log(2 * mpmath.pi) / 2
    w2 = w * w
    p = w
    for k, b in enumerate(_BERNOULLI, start=1):
        s += mpmath.mpf(b.numerator) / (b.denominator * (2 * k) * (2 * k - 1)) / p
        p *= w2
    return s


def _loggamma_right(z):
    m = int(max(0, math.ceil(_SHIFT - float(z.real))))
    acc = mpmath.mpc(0)
    for k in range(m):
        acc += mpmath.log(z + k)
    return _stirling_loggamma(z + m) - acc


def log_gamma(z, dps: int = _LOGGAMMA_DPS) -> mpmath.mpc:
    """Principal branch of ``log Gamma(z)``.

    The argument is shifted with ``Gamma(z+1) = z Gamma(z)`` until
    ``Re z >= 20`` and the Stirling series with 15 Bernoulli terms is summed.
    For ``Re z < 0`` the reflection formula is used and the imaginary part
    is moved onto the principal branch (continuous along rays from
    ``+infinity``).  Arithmetic is carried out in ``dps`` decimal digits and
    an mpmath complex is returned, so the result keeps absolute accuracy
    well below ``1e-12`` even when ``|log Gamma|`` is of order ``1e5``.

    Parameters
    ----------
    z : complex, float, int, Fraction or mpmath number
    dps : int
        Working precision in decimal digits.

    Raises
    ------
    PoleError
        If ``z`` is a non-positive integer.
    """
    with mpmath.workdps(dps):
        z = to_mpc(z)
        if z.imag == 0 and z.real <= 0 and mpmath.isint(z.real):
            raise PoleError(f"log_gamma pole at {z.real}")
        if z.real >= 0:
            out = _loggamma_right(z)
        else:
            out = mpmath.log(mpmath.pi) - mpmath.log(mpmath.sinpi(z)) - _loggamma_right(1 - z)
            # leading Stirling terms fix the branch: their error is far below pi
            lead = (z - 0.5) * mpmath.log(z) - z
            k = mpmath.nint((lead.imag - out.imag) / (2 * mpmath.pi))
            out += 2j * mpmath.pi * k
        return +out


def digamma(z):
    """Digamma function for arrays, double precision.

    Same shift strategy as :func:`log_gamma` followed by the asymptotic
    series ``log w - 1/(2w) - sum B_2k / (2k w^(2k))``; reflection for
    ``Re z < 0``.
    """
    z = np.asarray(z, dtype=complex)
    out_shape = z.shape
    z = np.atleast_1d(z).ravel()
    if np.any((z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))):
        raise PoleError("digamma pole at a non-positive integer")
    refl = z.real < 0
    w = np.where(refl, 1.0 - z, z)
    acc = np.zeros_like(w)
    m = np.maximum(0, np.ceil(_SHIFT - w.real)).astype(int)
    for k in range(int(m.max(initial=0))):
        mask = k < m
        acc[mask] += 1.0 / (w[mask] + k)
    w = w + m
    s = np.log(w) - 0.5 / w
    inv2 = 1.0 / (w * w)
    p = inv2.copy()
    for k, b in enumerate(_BERNOULLI[:10], start=1):
        s -= float(b) / (2 * k) * p
        p *= inv2
    res = s - acc
    if np.any(refl):
        zr = z[refl]
        res[refl] = res[refl] - np.pi / np.tan(np.pi * zr)
    res = res.reshape(out_shape)
    return res[()] if res.ndim == 0 else res
