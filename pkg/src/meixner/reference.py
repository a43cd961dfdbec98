"""Reference values of ``pi_n(n z - beta/2)`` for ``c = 1/2``,
``beta = 3/2``, ``n = 100``.

Each row holds the evaluation point, the true value and the leading-order
asymptotic value, all rounded to six significant digits.  The stored true value
for ``z = 0.001`` is ``3.07930e187`` whereas exact evaluation gives
``3.07830e187``; the entry is kept as recorded so that the comparison reports
the discrepancy instead of hiding it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = ["ReferenceRow", "REFERENCE_PARAMS", "REFERENCE_ROWS", "EXACT_TOL", "ASYM_TOL",
           "ERROR_BOUND"]

REFERENCE_PARAMS = (Fraction(1, 2), Fraction(3, 2), 100)

# agreement on six stored digits, on the stored asymptotic value, and the
# overall error bound of the leading-order formulas at n = 100
EXACT_TOL = 5e-6
ASYM_TOL = 1e-4
ERROR_BOUND = 5e-3


@dataclass(frozen=True)
class ReferenceRow:
    z: str
    true_value: str
    approx_value: str


REFERENCE_ROWS = (
    ReferenceRow("-1", "1.99529e233", "1.99473e233"),
    ReferenceRow("-0.001", "8.36624e187", "8.35137e187"),
    ReferenceRow("0.001", "3.07930e187", "3.07272e187"),
    ReferenceRow("0.05", "-2.51701e180", "-2.51507e180"),
    ReferenceRow("0.171", "-9.12697e174", "-9.12530e174"),
    ReferenceRow("0.172", "-1.22035e175", "-1.22003e175"),
    ReferenceRow("2", "-4.71541e201", "-4.70772e201"),
    ReferenceRow("5.828", "2.78146e259", "2.78231e259"),
    ReferenceRow("5.829", "2.86933e259", "2.87018e259"),
    ReferenceRow("100", "2.16586e399", "2.16586e399"),
)
