"""Explicit envelope constants and the per-zero kernel they come from.

For each integration order m >= 1 the bound envelope has the shape
K_m * log t / (log log t)^(m+1) with

    K_m = (a_sum + j2_term + j3_term) / (2 pi m!),

where, writing qbar = (1/e)(1 + 1/e),

    a_sum   = [sum_{j=0..m} m!/(m-j)! (1/e + 1/2^(j+1)e^2)] / (1 - qbar),
    j2_term = 1/(m+1) * qbar / (1 - qbar),
    j3_term = 1/(m(m+1)) * 1/(1 - qbar)      (m odd)
            = (pi/2)      * 1/(1 - qbar)      (m even).

All blocks are evaluated in closed form at full precision; the published
Fujii constants (0.83 for S, 0.51 for S_1) and the unconditional
Karatsuba-Korolev constants are kept only as cross-check references.

The odd-m kernel attached to a zero at distance B = |t - gamma| is

    K(B) = integral_0^Delta v^m (Delta - v)(B^2 - Delta v) / (v^2 + B^2) dv
         = Delta^(m+2) (g(y) - 1/(m(m+1))),          y = Delta / B,

with the shape function g evaluated through an arctan closed form for
y >= 1/4 and through its alternating even power series
2/(m(m+2)) - 2/((m+2)(m+4)) y^2 + ... below that switch point, where the
series remainder is under 1e-12 at twelve terms.  A direct quadrature
twin of K is kept for any parity of m and doubles as the closed form's
brute-force oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .numutil import exp_moment_tail
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate

Q_BAR = (1.0 / math.e) * (1.0 + 1.0 / math.e)

#: Published explicit constants kept for cross-checking, not consumed by
#: any computation: Fujii's conditional bounds for S and S_1, and the
#: unconditional Karatsuba-Korolev bounds.
REFERENCE_BOUNDS = {
    "fujii_s": 0.83,
    "fujii_s1": 0.51,
    "karatsuba_korolev_s": 8.0,
    "karatsuba_korolev_s1": 1.2,
}

_G_SERIES_SWITCH = 0.25
_G_SERIES_TERMS = 14


@dataclass(frozen=True)
class EnvelopeConstants:
    """Decomposition of the order-m envelope constant."""

    m: int
    q_bar: float
    a_sum: float
    j2_term: float
    j3_term: float
    k_total: float


def theorem_constant(m: int) -> EnvelopeConstants:
    """Exact closed-form evaluation of K_m, branch chosen by parity."""
    if m < 1:
        raise DomainError(f"theorem_constant requires m >= 1, got {m}")
    e = math.e
    raw = 0.0
    fac = 1.0
    for j in range(m + 1):
        if j > 0:
            fac *= m - j + 1        # m!/(m-j)!
        raw += fac * (1.0 / e + 1.0 / (2.0 ** (j + 1) * e * e))
    one_minus = 1.0 - Q_BAR
    a_sum = raw / one_minus
    j2 = Q_BAR / one_minus / (m + 1)
    if m % 2 == 1:
        j3 = 1.0 / (m * (m + 1)) / one_minus
    else:
        j3 = (math.pi / 2.0) / one_minus
    k_total = (a_sum + j2 + j3) / (2.0 * math.pi * math.factorial(m))
    return EnvelopeConstants(m=m, q_bar=Q_BAR, a_sum=a_sum, j2_term=j2,
                             j3_term=j3, k_total=k_total)


def envelope_bound(m: int, t: float) -> float:
    """K_m * log t / (log log t)^(m+1); defined for t > e^e."""
    if t <= math.e ** math.e:
        raise DomainError(f"envelope_bound requires t > e^e ~ 15.15, got {t}")
    return (theorem_constant(m).k_total * math.log(t)
            / math.log(math.log(t)) ** (m + 1))


@dataclass(frozen=True)
class KernelParams:
    """Kernel geometry: order m, offset Delta = 1/log X, distance B = |t-gamma|."""

    m: int
    delta: float
    b: float
    y: float | None = None

    def __post_init__(self):
        if self.m < 1:
            raise DomainError(f"kernel order m must be >= 1, got {self.m}")
        if self.delta <= 0.0:
            raise DomainError(f"delta must be positive, got {self.delta}")
        if self.b < 0.0:
            raise DomainError(f"b must be nonnegative, got {self.b}")
        if self.y is None and self.b > 0.0:
            object.__setattr__(self, "y", self.delta / self.b)

    @classmethod
    def from_ratio(cls, m: int, y: float) -> "KernelParams":
        """Kernel shape parameters for a given ratio y = Delta/B (Delta = 1)."""
        if y <= 0.0:
            raise DomainError(f"ratio y must be positive, got {y}")
        return cls(m=m, delta=1.0, b=1.0 / y)


def _i_power_sign(m: int) -> float:
    # i^(m+1) for odd m: -1 when m = 1 mod 4, +1 when m = 3 mod 4.
    return -1.0 if m % 4 == 1 else 1.0


def _g_closed(m: int, y: float) -> float:
    sgn = _i_power_sign(m)
    partial = 0.0
    for j in range(1, (m - 1) // 2 + 1):
        partial += (-1.0) ** (j - 1) / (2 * j - 1) * y ** (2 * j - 1)
    return (sgn * (y ** -(m + 2) + y ** -m) * (partial - math.atan(y))
            - 1.0 / (m * y * y))


def _g_series(m: int, y: float) -> float:
    acc = 0.0
    for r in range(_G_SERIES_TERMS):
        acc += (-1.0) ** r * 2.0 * y ** (2 * r) / ((m + 2 * r) * (m + 2 * r + 2))
    return acc


def g_kernel(kp: KernelParams) -> float:
    """Kernel shape function g(y) for odd m.

    Nonincreasing from g(0+) = 2/(m(m+2)) to 0 as y -> inf; evaluated by
    the alternating series below y = 1/4 (where the arctan closed form
    loses digits to cancellation) and by the closed form above.
    """
    if kp.m % 2 == 0:
        raise DomainError(f"g_kernel is defined for odd m, got m={kp.m}")
    if kp.y is None or kp.y <= 0.0:
        raise DomainError("g_kernel needs y = Delta/B > 0 (b must be > 0)")
    if kp.y < _G_SERIES_SWITCH:
        return _g_series(kp.m, kp.y)
    return _g_closed(kp.m, kp.y)


def k_gamma_closed(kp: KernelParams) -> float:
    """Closed form of the per-zero kernel (odd m).

    B = 0 collapses to -Delta^(m+2)/(m(m+1)); otherwise
    Delta^(m+2) (g(Delta/B) - 1/(m(m+1))).
    """
    if kp.m % 2 == 0:
        raise DomainError(f"k_gamma_closed requires odd m, got {kp.m}")
    scale = kp.delta ** (kp.m + 2)
    if kp.b == 0.0:
        return -scale / (kp.m * (kp.m + 1))
    return scale * (g_kernel(kp) - 1.0 / (kp.m * (kp.m + 1)))


def k_gamma_quadrature(kp: KernelParams,
                       cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Direct quadrature of the kernel integral, any parity of m.

    Serves as the independent oracle for k_gamma_closed.
    """
    d, b, m = kp.delta, kp.b, kp.m

    def integrand(v):
        v = np.atleast_1d(v)
        return v ** m * (d - v) * (b * b - d * v) / (v * v + b * b)

    bps = None
    if 0.0 < b < d / 4.0:
        bps = [b * f for f in (0.5, 1.0, 2.0, 4.0) if b * f < d]
    val, _ = integrate(integrand, 0.0, d, cfg, breakpoints=bps)
    return float(np.real(val))


def partial_integration_identity(m: int, X: float,
                                 cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Discrepancy of the exponential-moment identity

    integral_{sigma_1}^inf (s-1/2)^m (1 + X^(1/2-s)) X^(1/2-s) ds
        = (log X)^-(m+1) sum_{j=0..m} m!/(m-j)! (1/e + 1/2^(j+1)e^2),

    where sigma_1 = 1/2 + 1/log X.  The left side is adaptive quadrature
    up to tail_sigma_max plus the exact closed-form continuation beyond;
    returns the absolute difference against the right side.
    """
    if m < 1:
        raise DomainError(f"partial_integration_identity requires m >= 1, got {m}")
    if X < 4.0:
        raise DomainError(f"scale X must be >= 4, got {X}")
    lx = math.log(X)
    sigma1 = 0.5 + 1.0 / lx

    def integrand(sig):
        sig = np.atleast_1d(sig)
        w = X ** (0.5 - sig)
        return (sig - 0.5) ** m * (1.0 + w) * w

    tail_at = cfg.tail_sigma_max
    quad, _ = integrate(integrand, sigma1, tail_at, cfg,
                        breakpoints=[2.0, 6.0, 15.0])
    a0 = tail_at - 0.5
    tail = exp_moment_tail(m, a0, lx) + exp_moment_tail(m, a0, 2.0 * lx)

    raw = 0.0
    fac = 1.0
    for j in range(m + 1):
        if j > 0:
            fac *= m - j + 1
        raw += fac * (1.0 / math.e + 1.0 / (2.0 ** (j + 1) * math.e ** 2))
    closed = raw / lx ** (m + 1)
    return abs(float(np.real(quad)) + tail - closed)
