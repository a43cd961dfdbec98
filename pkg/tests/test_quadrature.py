import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from meixner.errors import QuadratureError
from meixner.quadrature import gk15, integrate, integrate_path


def test_gk15_is_exact_for_low_degree_polynomials():
    # Kronrod 15 points integrate degree 22 exactly
    v, err = gk15(lambda x: x**20 - 3 * x**5, -1.0, 1.0)
    assert_allclose(v, 2 / 21, rtol=1e-14)
    # the embedded 7-point Gauss rule is exact only to degree 13
    assert err > 1e-6
    _, err13 = gk15(lambda x: x**12 + x**13, -1.0, 1.0)
    assert err13 < 1e-14


def test_gk15_vector_valued():
    v, _ = gk15(lambda x: np.stack([np.ones_like(x), x], axis=-1), 0.0, 2.0)
    assert_allclose(v, [2.0, 2.0], rtol=1e-14)


@pytest.mark.parametrize(
    "f, a, b, ref",
    [
        (np.exp, 0.0, 1.0, math.e - 1),
        (lambda x: np.sqrt(x), 0.0, 1.0, 2 / 3),
        (lambda x: np.log(x), 0.0, 1.0, -1.0),
        (lambda x: 1 / (1 + x * x), -50.0, 50.0, 2 * math.atan(50.0)),
    ],
)
def test_integrate_known_values(f, a, b, ref):
    assert abs(integrate(f, a, b, abs_tol=1e-12) - ref) < 1e-11


def test_integrate_complex_segment():
    # integral of 1/z over the upper half of the unit circle approximated by a polygon
    pts = [1.0, 1j, -1.0]
    assert_allclose(integrate_path(lambda z: 1 / z, pts), 1j * math.pi, atol=1e-12)


def test_breakpoints_help_with_kinks():
    v = integrate(lambda x: np.abs(x - 0.3), 0.0, 1.0, breakpoints=(0.3,))
    assert_allclose(v, 0.5 * (0.3**2 + 0.7**2), atol=1e-14)


def test_budget_exhaustion_raises():
    with pytest.raises(QuadratureError):
        integrate(lambda x: np.sin(1 / x), 1e-9, 1.0, abs_tol=1e-14, max_panels=20)
