"""Von Mangoldt sieve and the tapered (Selberg-style) Dirichlet sums.

The mollifier weight attaches to a scale X >= 4: below X it is the plain
von Mangoldt function Lambda(n) = log p at prime powers, and on [X, X^2]
it is damped linearly in log n,

    Lambda_X(n) = Lambda(n) * log(X^2/n) / log X,

vanishing at n = X^2.  The shifted abscissa sigma_1 = 1/2 + 1/log X and
the offset Delta = 1/log X travel with the scale as MollifierParams.

All sums run over the strict range n < X^2; n = 1 never contributes
(Lambda(1) = 0) so the 1/log n weights are well defined from n = 2 on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import CoverageError, DomainError, ResourceError
from .numutil import csum_array, exp_moment_tail
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate

# Sieving beyond this limit would need >~0.5 GB; refuse rather than swap.
MAX_SIEVE_LIMIT = 50_000_000


@dataclass(eq=False)
class MangoldtTable:
    """Sparse table of Lambda(n) for n <= limit (prime powers only)."""

    limit: int
    values: dict[int, float]                       # n -> log p
    prime_powers: np.ndarray = field(repr=False)   # sorted n with Lambda(n) != 0
    log_values: np.ndarray = field(repr=False)     # Lambda at prime_powers

    def lambda_at(self, n: int) -> float:
        if not 1 <= n <= self.limit:
            raise CoverageError(f"n={n} outside table range 1..{self.limit}")
        return self.values.get(n, 0.0)


def build_mangoldt(limit: int) -> MangoldtTable:
    """Sieve Lambda(n) for all n <= limit.

    Exact values: for n = p^k the stored weight is log p computed once per
    prime, so equal prime powers share the identical float.
    """
    if limit < 4:
        raise DomainError(f"build_mangoldt requires limit >= 4, got {limit}")
    if limit > MAX_SIEVE_LIMIT:
        raise ResourceError(
            f"limit {limit} exceeds sieve budget {MAX_SIEVE_LIMIT}")
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, int(math.isqrt(limit)) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    primes = np.flatnonzero(is_prime)

    values: dict[int, float] = {}
    for p in primes.tolist():
        logp = math.log(p)
        q = p
        while q <= limit:
            values[q] = logp
            q *= p
    ns = np.array(sorted(values), dtype=np.int64)
    return MangoldtTable(
        limit=limit,
        values=values,
        prime_powers=ns,
        log_values=np.array([values[int(n)] for n in ns]),
    )


@dataclass(frozen=True)
class MollifierParams:
    """Scale X with its derived abscissa sigma_1 = 1/2 + Delta, Delta = 1/log X."""

    X: float
    sigma1: float
    delta: float

    def __post_init__(self):
        if self.X < 4.0:
            raise DomainError(f"mollifier scale X must be >= 4, got {self.X}")

    @classmethod
    def from_scale(cls, X: float) -> "MollifierParams":
        if X < 4.0:
            raise DomainError(f"mollifier scale X must be >= 4, got {X}")
        delta = 1.0 / math.log(X)
        return cls(X=float(X), sigma1=0.5 + delta, delta=delta)


def lambda_X(n: int, p: MollifierParams, tbl: MangoldtTable) -> float:
    """Tapered weight: Lambda(n) for n <= X, damped by log(X^2/n)/log X above.

    Defined for 1 <= n < X^2; both branch formulas agree at n = X.
    """
    if n < 1 or n >= p.X * p.X:
        raise DomainError(f"lambda_X defined for 1 <= n < X^2, got n={n}")
    lam = tbl.lambda_at(n)
    if lam == 0.0 or n <= p.X:
        return lam
    return lam * math.log(p.X * p.X / n) / math.log(p.X)


@lru_cache(maxsize=64)
def _taper_arrays(p: MollifierParams, tbl: MangoldtTable):
    """(n, Lambda_X(n), log n) arrays over prime powers n < X^2."""
    x2 = p.X * p.X
    if tbl.limit < x2:
        raise CoverageError(
            f"Mangoldt table limit {tbl.limit} < X^2 = {x2:.1f}")
    cut = np.searchsorted(tbl.prime_powers, x2, side="left")
    ns = tbl.prime_powers[:cut].astype(float)
    lam = tbl.log_values[:cut].copy()
    tapered = ns > p.X
    lam[tapered] *= np.log(x2 / ns[tapered]) / math.log(p.X)
    return ns, lam, np.log(ns)


def dirichlet_sum(p: MollifierParams, s: complex,
                  tbl: MangoldtTable) -> complex:
    """Finite sum over n < X^2 of Lambda_X(n) n^-s, compensated."""
    ns, lam, logn = _taper_arrays(p, tbl)
    return csum_array(lam * np.exp(-complex(s) * logn))


def weighted_dirichlet_sum(p: MollifierParams, s: complex, j: int,
                           tbl: MangoldtTable) -> complex:
    """Sum over 2 <= n < X^2 of Lambda_X(n) n^-s (log n)^-(j+1)."""
    if j < 0:
        raise DomainError(f"weight order j must be >= 0, got {j}")
    ns, lam, logn = _taper_arrays(p, tbl)
    return csum_array(lam * np.exp(-complex(s) * logn) / logn ** (j + 1))


def dirichlet_sum_batch(p: MollifierParams, s_values: np.ndarray,
                        tbl: MangoldtTable) -> np.ndarray:
    """dirichlet_sum evaluated at an array of s (quadrature hot path)."""
    ns, lam, logn = _taper_arrays(p, tbl)
    return np.exp(-np.multiply.outer(s_values, logn)) @ lam.astype(complex)


def dirichlet_moment_identity(p: MollifierParams, t: float, m: int,
                              tbl: MangoldtTable,
                              cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Discrepancy of the repeated-integration-by-parts identity

    integral_{sigma_1}^{inf} (sigma-1/2)^m sum_n Lambda_X(n) n^(-sigma-it) dsigma
      = sum_{j=0..m} m!/(m-j)! Delta^(m-j)
          sum_n Lambda_X(n) / (n^(sigma_1+it) (log n)^(j+1)).

    The left side is adaptive quadrature up to tail_sigma_max plus the
    exact per-n continuation of the truncated integrand beyond it; the
    right side is the closed form.  Returns |left - right|.
    """
    if m < 1:
        raise DomainError(f"moment order m must be >= 1, got {m}")
    ns, lam, logn = _taper_arrays(p, tbl)
    phase = lam * np.exp(-1j * t * logn)

    def integrand(sig):
        sig = np.atleast_1d(sig)
        sums = np.exp(-np.multiply.outer(sig, logn)) @ phase
        return (sig - 0.5) ** m * sums

    tail_at = cfg.tail_sigma_max
    quad, _ = integrate(integrand, p.sigma1, tail_at, cfg,
                        breakpoints=[2.0, 6.0, 15.0])
    # Exact tail: each n integrates in closed form on [tail_at, inf).
    a0 = tail_at - 0.5
    tail = csum_array(np.array([
        ph * nv ** -0.5 * exp_moment_tail(m, a0, lg)
        for ph, nv, lg in zip(phase, ns, logn)
    ], dtype=complex))

    closed = 0.0 + 0.0j
    fac = 1.0
    for j in range(m + 1):
        if j > 0:
            fac *= m - j + 1
        closed += (fac * p.delta ** (m - j)
                   * weighted_dirichlet_sum(p, p.sigma1 + 1j * t, j, tbl))
    return abs(quad + tail - closed)
