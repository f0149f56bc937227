"""Small numeric helpers: compensated summation and exponential moments.

The Dirichlet-type sums and zero sums in this package suffer heavy
cancellation, so scalar accumulation goes through error-free-transform
summation (math.fsum) rather than naive loops.  Vectorized hot paths use
numpy's pairwise reduction, which is adequate at the array sizes involved.
"""

from __future__ import annotations

import math

import numpy as np

EULER_GAMMA = float(np.euler_gamma)

#: Bernoulli numbers B_2, B_4, ..., B_16 (exact rationals as floats).
BERNOULLI_2K = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
)


def rsum(values) -> float:
    """Compensated (exact) sum of real values."""
    return math.fsum(values)


def csum(values) -> complex:
    """Compensated sum of complex values, componentwise fsum."""
    vals = list(values)
    return complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals))


def csum_array(arr: np.ndarray) -> complex:
    """Compensated sum of a complex ndarray."""
    return complex(math.fsum(arr.real.tolist()), math.fsum(arr.imag.tolist()))


def exp_moment_tail(m: int, a: float, c: float) -> float:
    """Closed form of the incomplete exponential moment
    ``integral_a^inf u^m exp(-c u) du`` for integer m >= 0, c > 0.

    Equals ``exp(-c a) * sum_j m!/(m-j)! a^(m-j) / c^(j+1)``.
    """
    if m < 0 or c <= 0.0:
        raise ValueError("need m >= 0 and c > 0")
    fac = 1.0
    acc = 0.0
    for j in range(m + 1):
        if j > 0:
            fac *= m - j + 1  # m!/(m-j)!
        acc += fac * a ** (m - j) / c ** (j + 1)
    return math.exp(-c * a) * acc
