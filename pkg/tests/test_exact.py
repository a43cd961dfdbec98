import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meixner.errors import DomainError
from meixner.exact import (
    MeixnerParams,
    eval_scaled_exact,
    meixner_hyp,
    monic_coefficients,
    monic_from_meixner,
    monic_recurrence,
    squared_norm,
    weight_ratio,
)
from meixner.numerics import GaussianRational, ScaledReal

F = Fraction
P = MeixnerParams(F(1, 2), F(3, 2), 100)


def params(n, c=F(1, 2), beta=F(3, 2)):
    return MeixnerParams(c, beta, n)


def test_params_validation():
    assert params(3).c == F(1, 2)
    assert MeixnerParams("0.5", "1.5", 2).beta == F(3, 2)
    for bad in [(F(1), F(3, 2), 1), (F(1, 2), F(2), 1), (F(1, 2), F(1, 2), 1), (F(1, 2), F(1), -1)]:
        with pytest.raises(DomainError):
            MeixnerParams(*bad)


def test_low_degree_closed_forms():
    z = F(7, 3)
    assert meixner_hyp(params(0), z) == GaussianRational(F(1))
    assert meixner_hyp(params(1), z) == GaussianRational(1 - 2 * z / 3)
    assert monic_from_meixner(params(1), z) == GaussianRational(z - F(3, 2))
    assert monic_recurrence(params(1), z) == GaussianRational(z - F(3, 2))
    assert monic_recurrence(params(1), F(3, 2)).re == 0
    assert monic_recurrence(params(0), 5) == GaussianRational(F(1))


def test_monic_leading_coefficient():
    for n in range(6):
        coeffs = monic_coefficients(params(n))
        assert len(coeffs) == n + 1 and coeffs[-1] == 1
        z = F(5, 7)
        assert sum(cf * z**k for k, cf in enumerate(coeffs)) == monic_recurrence(params(n), z).re


def test_routes_agree_on_random_points():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(0, 25)
        p = MeixnerParams(F(rng.randint(1, 9), 10), F(rng.randint(10, 19), 10), n)
        z = GaussianRational(F(rng.randint(-200, 200), rng.randint(1, 50)),
                             F(rng.randint(-20, 20), rng.randint(1, 9)))
        assert monic_from_meixner(p, z) == monic_recurrence(p, z)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 12), st.fractions(-50, 50, max_denominator=100),
       st.fractions(-5, 5, max_denominator=100))
def test_conjugate_symmetry_exact(n, re, im):
    z = GaussianRational(re, im)
    assert monic_recurrence(params(n), z.conjugate()) == monic_recurrence(params(n), z).conjugate()


@pytest.mark.parametrize("z, text", [
    ("-1", "1.99529e233"),
    ("0.05", "-2.51701e180"),
    ("5.829", "2.86933e259"),
    ("100", "2.16586e399"),
])
def test_reference_exact_values(z, text):
    v = eval_scaled_exact(P, z)
    assert isinstance(v, ScaledReal)
    assert v.format(6) == text


def test_weight_ratio():
    p = params(0)
    assert weight_ratio(p, 0) == 1
    assert weight_ratio(p, 1) == F(3, 4)
    assert weight_ratio(p, 2) == F(15, 32)
    with pytest.raises(DomainError):
        weight_ratio(p, -1)


def test_truncated_orthogonality():
    c, beta = F(1, 2), F(3, 2)
    K = 220
    ws = [weight_ratio(params(0), k) for k in range(K)]
    m_vals = {m: [meixner_hyp(params(m), k).re for k in range(K)] for m in range(6)}
    for m in range(6):
        for n in range(m, 6):
            s = sum(w * u * v for w, u, v in zip(ws, m_vals[m], m_vals[n]))
            if m != n:
                assert abs(float(s)) < 1e-30
            else:
                with mpmath.workdps(40):
                    ref = squared_norm(params(0, c, beta), m)
                    assert abs(mpmath.mpf(s.numerator) / s.denominator / ref - 1) < 1e-20
