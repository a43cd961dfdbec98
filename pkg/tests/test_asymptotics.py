import cmath
import math
import warnings
from decimal import Decimal
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meixner.asymptotics import (
    FORMULA_OF,
    CancellationWarning,
    HalfPlane,
    RegionTag,
    band_forms,
    classify_region,
    default_eps_delta,
    eval_airy_a,
    eval_airy_b,
    eval_band,
    eval_origin,
    eval_outer,
    eval_strip_left,
    evaluate,
)
from meixner.equilibrium import turning_points
from meixner.errors import DomainError, RegionError
from meixner.exact import MeixnerParams, eval_scaled_exact
from meixner.numerics import GaussianRational, LogComplex, ScaledReal, rel_diff

P = MeixnerParams("0.5", "1.5", 100)
TP = turning_points(P.c)
EPS, DELTA = default_eps_delta(TP)
A, B = TP.a, TP.b


def quiet(fn, *args, **kw):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CancellationWarning)
        return fn(*args, **kw)


def test_default_eps_delta():
    assert abs(EPS - 0.042893218813452) < 1e-12
    assert DELTA == 2 * EPS


@pytest.mark.parametrize("z, tag", [
    (100, RegionTag.OUTER), (-1, RegionTag.OUTER), (0.171, RegionTag.AIRY_A),
    (0.172, RegionTag.AIRY_A), (2, RegionTag.BAND_RIGHT), (0.5, RegionTag.BAND_LEFT),
    (0.05, RegionTag.STRIP_LEFT), (0.001, RegionTag.ORIGIN_RIGHT),
    (-0.001, RegionTag.ORIGIN_LEFT), (5.828, RegionTag.AIRY_B), (5.829, RegionTag.AIRY_B),
    (1j * EPS, RegionTag.ORIGIN_LEFT), (B + EPS, RegionTag.AIRY_B), (1 + 0j, RegionTag.BAND_RIGHT),
])
def test_classification_examples(z, tag):
    assert classify_region(z, EPS, DELTA, TP).tag is tag


def test_half_planes_and_formulas():
    assert classify_region(2 + 0.01j, EPS, DELTA, TP).half_plane is HalfPlane.UPPER
    assert classify_region(2 - 0.01j, EPS, DELTA, TP).half_plane is HalfPlane.LOWER
    r = classify_region(2, EPS, DELTA, TP)
    assert r.half_plane is HalfPlane.REAL and r.formula == "O3" and str(r) == "BandRight"
    assert len(set(FORMULA_OF.values())) == 8


def test_classify_rejects_bad_widths():
    for eps, delta in ((0, 1), (0.1, 0.1), (0.2, 0.1)):
        with pytest.raises(ValueError):
            classify_region(1, eps, delta, TP)


@settings(max_examples=300, deadline=None)
@given(st.floats(-10, 15), st.floats(-3, 3))
def test_classification_is_total_and_stable(x, y):
    z = complex(x, y)
    region = classify_region(z, EPS, DELTA, TP)
    assert region.tag in set(RegionTag)
    # away from all edges small perturbations never change the region
    edges = [abs(abs(z) - EPS), abs(abs(z - A) - EPS), abs(abs(z - B) - EPS),
             abs(abs(y) - DELTA), abs(x), abs(x - A), abs(x - B), abs(x - 1), abs(y)]
    if min(edges) > 1e-8:
        for dz in (1e-9, -1e-9, 1e-9j, -1e-9j):
            assert classify_region(z + dz, EPS, DELTA, TP) == region


def test_classification_on_ten_thousand_points():
    rng = np.random.default_rng(11)
    zs = rng.uniform(-2, 8, 10_000) + 1j * rng.uniform(-0.3, 0.3, 10_000)
    counts = {}
    for z in zs:
        tag = classify_region(z, EPS, DELTA, TP).tag
        counts[tag] = counts.get(tag, 0) + 1
    assert sum(counts.values()) == 10_000
    assert set(counts) == set(RegionTag)


@pytest.mark.parametrize("z, text", [
    ("-1", "1.99473e233"), ("-0.001", "8.35137e187"), ("0.001", "3.07272e187"),
    ("0.05", "-2.51507e180"), ("0.171", "-9.12530e174"), ("0.172", "-1.22003e175"),
    ("2", "-4.70772e201"), ("5.829", "2.87018e259"), ("100", "2.16586e399"),
])
def test_reference_approximations(z, text):
    r = evaluate(z, P)
    assert isinstance(r.value, ScaledReal)
    # stored to six digits; 100 comes out as 2.16585e399
    assert rel_diff(r.value, ScaledReal.from_decimal(Decimal(text))) <= 1e-4


def test_conjugate_symmetry_all_regions():
    for z in (-1 + 0.3j, 0.05 + 0.02j, 0.02 + 0.01j, -0.01 + 0.02j, A + 0.01j,
              B - 0.02j, 2 + 0.05j, 0.7 + 0.03j, 30 + 5j):
        r, rc = quiet(evaluate, z, P), quiet(evaluate, z.conjugate(), P)
        assert rel_diff(rc.value, LogComplex(r.value.log_mag, -r.value.phase)) <= 1e-9
        assert r.region.tag is rc.region.tag


# forty rational points in the regime of the reference table: away from the
# polynomial zeros close to the real axis and from the edges of the band
GRID = (
    [(F(r), F(i)) for r in (-2, F(-1, 5), F(1, 2), 2, 3, 7, 12) for i in (F(1, 2), F(-1, 2), 2)]
    + [(F(r), F(0)) for r in (-4, F(-1, 10), 8, 30, F(3, 100), F(7, 100))]
    + [(r, F(1, 20)) for r in (F(1, 50), F(3, 50), F(9, 10), F(3, 2))]
    + [(r, F(1, 100)) for r in (F(1, 2), F(3, 2), F(5, 2), F(7, 2), F(6, 5), F(9, 4))]
    + [(F(100), F(1)), (F(-1), F(0)), (F(3, 100), F(1, 50))]
)


def test_grid_against_exact():
    assert len(GRID) == 40
    worst = 0.0
    for re, im in GRID:
        z = GaussianRational(re, im)
        r = quiet(evaluate, z, P)
        d = rel_diff(r.value, eval_scaled_exact(P, z))
        assert d <= r.err_estimate
        worst = max(worst, d)
    assert worst <= 5e-3


def test_band_forms_agree():
    for z in (1 + 0.01j, 1 - 0.01j, 0.4, 4.5 + 0.08j, 3):
        log2, log3 = band_forms(z, P)
        assert abs(cmath.exp(log2 - log3) - 1) <= 1e-9
    quiet(eval_band, 1 + 0.01j, P, check_o2=True)


@pytest.mark.parametrize("z", ["-1", "-0.01", "0.01", "0.1", "0.171", "0.4", "3", "5.83", "7"])
def test_real_axis_gives_real_values(z):
    r = quiet(evaluate, z, P)
    assert isinstance(r.value, ScaledReal)
    assert abs(math.sin(r.log_value.imag)) <= 1e-8
    assert r.err_estimate > 0


def test_region_mismatch_raises():
    cases = [(eval_outer, 2), (eval_strip_left, 100), (eval_origin, 2),
             (eval_airy_a, 2), (eval_airy_b, 2), (eval_band, 100)]
    for fn, z in cases:
        with pytest.raises(RegionError):
            fn(z, P)


def test_origin_and_n_zero_errors():
    with pytest.raises(DomainError):
        eval_origin(0, P)
    with pytest.raises(DomainError):
        evaluate(5, P.with_n(0))


def test_cancellation_warning_near_a_zero():
    # z = 0.22 lies next to a zero of pi_100(100 z - 3/4)
    with pytest.warns(CancellationWarning):
        r = evaluate("0.22", P)
    d = rel_diff(r.value, eval_scaled_exact(P, "0.22"))
    assert d > 5e-3


def test_error_estimate_covers_errors_near_b():
    for z in ("5.6", "5.7", "5.75", "5.9", "6.2"):
        r = quiet(evaluate, z, P)
        assert rel_diff(r.value, eval_scaled_exact(P, z)) <= r.err_estimate


def test_strip_error_halves_when_n_doubles():
    errs = [rel_diff(evaluate("0.05", P.with_n(n)).value, eval_scaled_exact(P.with_n(n), "0.05"))
            for n in (100, 200)]
    assert 0.3 < errs[1] / errs[0] < 0.8


def test_custom_widths_change_region():
    assert evaluate("2", P).formula == "O3"
    assert quiet(evaluate, complex(2, 0.5), P, delta=0.6).formula == "O3"
    assert quiet(evaluate, complex(2, 0.5), P).formula == "O4"
    assert quiet(evaluate, "0.14", P, eps=0.01).formula == "O1"
