"""The argument function S(t), its iterated integrals, and their
single-integral representation.

S(t) is computed by the argument principle: continuous variation of
arg zeta along the polyline 2 -> 2+it -> 1/2+it.  On the vertical leg
Re zeta stays positive (|zeta(2+iy) - 1| <= pi^2/6 - 1 < 1), so the
continuous argument there is the principal argument; the horizontal leg
is tracked by adaptive bisection that keeps every per-step phase
increment below pi/2, which makes the winding unambiguous.

The iterated integrals

    S_m(t) = integral_0^t S_{m-1}(u) du + C_m,      S_0 = S,

are evaluated on a piecewise-polynomial representation of S_0: panels are
cut exactly at the zero ordinates (the only jump points), S_0 is sampled
at Gauss-Legendre nodes inside each smooth panel, and every integration
level is then exact polynomial algebra.  Below t = 2 the counting formula
with N = 0 supplies S_0 through the analytic continuation of theta.

The independent route is the single integral

    I_m(t) = -(1/pi) Im { i^m/m! integral_{1/2}^inf
                          (sigma-1/2)^m zeta'/zeta(sigma+it) dsigma },

truncated at tail_sigma_max with an explicit exponential tail bound.
sm_crosscheck runs both routes and reports their discrepancy; the two
agreeing is the central correctness property of the package.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial import legendre

from .errors import (AtOrdinateError, CoverageError, DomainError,
                     NonConvergenceError)
from .numutil import exp_moment_tail
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate
from .zeros import ZeroTable
from .zetacore import (theta_unrestricted, zeta_and_deriv_batch,
                       zeta_log_deriv_batch)

# Accepted per-step phase increment on the horizontal leg; safely below
# the pi/2 winding-safety ceiling.
_PHASE_STEP_MAX = 0.9

_GL_DEGREE = 16
_PANEL_MAX_LEN = 4.0
_PANEL_MIN_LEN = 0.1

# log zeta(sigma) <= 2^(1-sigma) for sigma >= 3; with the log 2 prefactor
# of zeta'/zeta the shared tail envelope is 2^(1-sigma) (log 2 + 1).
_TAIL_ENVELOPE = math.log(2.0) + 1.0


def _dirichlet_tail(m: int, sigma_from: float) -> float:
    """integral_sigma_from^inf (s-1/2)^m 2^(1-s) (log2+1) ds, closed form."""
    return (_TAIL_ENVELOPE * math.sqrt(2.0)
            * exp_moment_tail(m, sigma_from - 0.5, math.log(2.0)))


def s_of_t(t: float, cfg: QuadratureConfig = DEFAULT_CONFIG,
           z: ZeroTable | None = None, corner: float = 2.0) -> float:
    """S(t) by continuous variation of arg zeta along 2 -> 2+it -> 1/2+it.

    Within ``zero_exclusion_eps`` of a tabulated ordinate the two-sided
    midpoint value (S(t+2eps) + S(t-2eps))/2 is returned.  ``corner`` moves
    the right-hand corner of the path (path independence demands the
    result not care, as long as corner >= 2 keeps Re zeta > 0 on the
    vertical leg).
    """
    if t < 2.0:
        raise DomainError(f"s_of_t requires t >= 2, got {t}")
    if not 2.0 <= corner <= cfg.tail_sigma_max:
        raise DomainError(f"corner abscissa {corner} outside [2, tail]")
    if z is not None:
        if t > z.last:
            raise CoverageError(
                f"t={t} beyond zero-table coverage {z.last:.4f}")
        if z.nearest_distance(t) < cfg.zero_exclusion_eps:
            eps2 = 2.0 * cfg.zero_exclusion_eps
            return 0.5 * (s_of_t(t + eps2, cfg, z, corner)
                          + s_of_t(t - eps2, cfg, z, corner))

    vert, _, _ = zeta_and_deriv_batch(np.array([corner + 1j * t]))
    total = float(np.angle(vert[0]))

    # Horizontal leg, descending corner -> 1/2, graded toward 1/2.
    u = np.linspace(0.0, 1.0, 33)
    sig = np.unique(np.concatenate([
        0.5 + (corner - 0.5) * (1.0 - u) ** 2,
        np.linspace(0.5, corner, 17),
    ]))[::-1]
    w, _, _ = zeta_and_deriv_batch(sig + 1j * t)
    budget = 16 * cfg.max_subdivisions
    while True:
        steps = np.angle(w[1:] / w[:-1])
        bad = np.abs(steps) > _PHASE_STEP_MAX
        if not bad.any():
            break
        if len(sig) > budget:
            raise NonConvergenceError(
                f"phase tracking at t={t} failed to settle below pi/2 steps")
        mids = 0.5 * (sig[:-1][bad] + sig[1:][bad])
        wm, _, _ = zeta_and_deriv_batch(mids + 1j * t)
        sig = np.concatenate([sig, mids])
        w = np.concatenate([w, wm])
        order = np.argsort(-sig)
        sig = sig[order]
        w = w[order]
    total += float(np.angle(w[1:] / w[:-1]).sum())
    return total / math.pi


@dataclass
class CmConstant:
    """Integration constant of one iteration level."""

    m: int
    value: float
    method: str          # "closed_form_even" | "quadrature_odd"
    tail_bound: float


def _log_abs_zeta(sig: np.ndarray) -> np.ndarray:
    zvals, _, _ = zeta_and_deriv_batch(sig.astype(complex))
    return np.log(np.abs(zvals))


@lru_cache(maxsize=None)
def constant_Cm(m: int, cfg: QuadratureConfig = DEFAULT_CONFIG) -> CmConstant:
    """The constant C_m attached to the m-th integration level.

    Even m = 2k has the closed form (-1)^(k-1) / ((2k)! 2^(2k)).  Odd
    m = 2k-1 is the (2k-1)-fold repeated integral of (1/pi) log|zeta| on
    (1/2, inf), collapsed by the Cauchy repeated-integration formula to

        (1/pi) (-1)^(k-1) integral_{1/2}^inf
            (sigma-1/2)^(m-1)/(m-1)! log|zeta(sigma)| dsigma,

    integrated adaptively with geometric refinement into the logarithmic
    singularity at sigma = 1 and an exponential bound for the cut tail.
    """
    if m < 1:
        raise DomainError(f"constant_Cm requires m >= 1, got {m}")
    if m % 2 == 0:
        k = m // 2
        value = (-1.0) ** (k - 1) / (math.factorial(2 * k) * 2.0 ** (2 * k))
        return CmConstant(m=m, value=value, method="closed_form_even",
                          tail_bound=0.0)
    k = (m + 1) // 2
    fac = math.factorial(m - 1)

    def f(sig):
        sig = np.atleast_1d(sig)
        return (sig - 0.5) ** (m - 1) / fac * _log_abs_zeta(sig)

    tail_at = cfg.tail_sigma_max
    # sigma = 1.0 must be a panel EDGE: Gauss nodes are interior, so the
    # integrable log-pole of log|zeta| is never evaluated exactly.
    bps = [1.0 - h for h in (0.3, 0.1, 0.03, 0.01, 3e-3, 1e-3, 1e-4, 1e-5)]
    bps += [1.0]
    bps += [1.0 + h for h in (1e-5, 1e-4, 1e-3, 3e-3, 0.01, 0.03, 0.1, 0.3)]
    bps += [2.0, 4.0, 8.0, 16.0]
    val, _ = integrate(f, 0.5, tail_at, cfg, breakpoints=bps)
    tail = _dirichlet_tail(m - 1, tail_at) / fac
    return CmConstant(m=m, value=float((-1.0) ** (k - 1) * val / math.pi),
                      method="quadrature_odd", tail_bound=tail / math.pi)


class _S0Curve:
    """Piecewise Gauss-Legendre representation of S_0 on [0, t_hi].

    Panels never straddle a zero ordinate, so S_0 is smooth inside each
    one; a panel is split further whenever the tail of its Legendre
    coefficients indicates the fit has not converged.
    """

    def __init__(self, z: ZeroTable, cfg: QuadratureConfig, t_hi: float):
        self.z = z
        self.cfg = cfg
        self.t_hi = t_hi
        self._levels: dict[int, list[np.ndarray]] = {}

        cuts = [0.0, 2.0] + [float(g) for g in z.ordinates if g < t_hi] + [t_hi]
        cuts = sorted(set(cuts))
        nodes, _ = legendre.leggauss(_GL_DEGREE)
        self._nodes = nodes

        self.panels: list[tuple[float, float]] = []
        self.coef: list[np.ndarray] = []
        for a, b in zip(cuts[:-1], cuts[1:]):
            nsplit = max(1, math.ceil((b - a) / _PANEL_MAX_LEN))
            for i in range(nsplit):
                lo = a + (b - a) * i / nsplit
                hi = a + (b - a) * (i + 1) / nsplit
                self._add_panel(lo, hi)
        self._starts = [p[0] for p in self.panels]

    def _s0(self, t: float) -> float:
        if t < 2.0:
            # Counting formula with N = 0; theta continued analytically.
            return -1.0 - theta_unrestricted(t) / math.pi
        return s_of_t(t, self.cfg, None)

    def _add_panel(self, a: float, b: float):
        mid = 0.5 * (a + b)
        half = 0.5 * (b - a)
        samples = np.array([self._s0(mid + half * x) for x in self._nodes])
        c = legendre.legfit(self._nodes, samples, _GL_DEGREE - 1)
        tail = abs(c[-1]) + abs(c[-2])
        if tail > 1e-10 and (b - a) > _PANEL_MIN_LEN:
            self._add_panel(a, mid)
            self._add_panel(mid, b)
            return
        self.panels.append((a, b))
        self.coef.append(c)

    def level_coefficients(self, m: int) -> list[np.ndarray]:
        """Per-panel Legendre coefficients of S_m (cached)."""
        if m == 0:
            return self.coef
        if m in self._levels:
            return self._levels[m]
        prev = self.level_coefficients(m - 1)
        acc = constant_Cm(m, self.cfg).value     # S_m(0) = C_m
        out = []
        for (a, b), c in zip(self.panels, prev):
            ci = legendre.legint(c) * 0.5 * (b - a)
            ci[0] += acc - legendre.legval(-1.0, ci)
            out.append(ci)
            acc = legendre.legval(1.0, ci)
        self._levels[m] = out
        return out

    def eval(self, m: int, t: float) -> float:
        coefs = self.level_coefficients(m)
        i = bisect.bisect_right(self._starts, t) - 1
        i = min(max(i, 0), len(self.panels) - 1)
        a, b = self.panels[i]
        x = 2.0 * (t - a) / (b - a) - 1.0
        return float(legendre.legval(x, coefs[i]))


_CURVE_CACHE: dict[tuple, _S0Curve] = {}


def _get_curve(z: ZeroTable, cfg: QuadratureConfig, t: float) -> _S0Curve:
    ceiling = min(z.last, 25.0 * math.ceil((t + 1e-9) / 25.0) + 5.0)
    ceiling = max(ceiling, t)
    key = (id(z), cfg, ceiling)
    curve = _CURVE_CACHE.get(key)
    if curve is None:
        curve = _S0Curve(z, cfg, ceiling)
        _CURVE_CACHE[key] = curve
    return curve


def s_m_iterated(m: int, t: float, cfg: QuadratureConfig = DEFAULT_CONFIG,
                 z: ZeroTable | None = None) -> float:
    """S_m(t) by m-fold cumulative integration of S_0 plus the C-constants.

    S_0 jumps at the ordinates (handled as panel boundaries); every
    S_m with m >= 1 is continuous, so no midpoint convention is needed.
    """
    if m < 1:
        raise DomainError(f"s_m_iterated requires m >= 1, got {m}")
    if z is None:
        raise DomainError("s_m_iterated needs a zero table for the jump points")
    if t < 0.0:
        raise DomainError(f"s_m_iterated requires t >= 0, got {t}")
    if t > z.last:
        raise CoverageError(
            f"t={t} beyond zero-table coverage {z.last:.4f}")
    if t == 0.0:
        return constant_Cm(m, cfg).value
    return _get_curve(z, cfg, t).eval(m, t)


def i_m_single(m: int, t: float, cfg: QuadratureConfig = DEFAULT_CONFIG,
               z: ZeroTable | None = None) -> float:
    """The one-dimensional integral route to S_m:

    -(1/pi) Im { i^m/m! integral_{1/2}^tail (sigma-1/2)^m
                 zeta'/zeta(sigma+it) dsigma }.

    For m >= 1 the endpoint factor (sigma-1/2)^m tames the pole-like spike
    that a nearby zero ordinate induces at sigma = 1/2, and a t within
    zero_exclusion_eps of an ordinate is evaluated by the two-sided
    midpoint convention.  For m = 0 such t raise AtOrdinateError.  Beyond
    the zero table's reach ordinate proximity cannot be detected; the
    integral is still well defined for m >= 1 and is evaluated directly.
    """
    if m < 0:
        raise DomainError(f"i_m_single requires m >= 0, got {m}")
    if t < 2.0:
        raise DomainError(f"i_m_single requires t >= 2, got {t}")
    near = None
    if z is not None and t <= z.last:
        near = z.nearest_distance(t)
        if near < cfg.zero_exclusion_eps:
            if m == 0:
                raise AtOrdinateError(
                    f"i_m_single with m=0 undefined within {cfg.zero_exclusion_eps}"
                    f" of an ordinate (t={t})")
            eps2 = 2.0 * cfg.zero_exclusion_eps
            return 0.5 * (i_m_single(m, t + eps2, cfg, z)
                          + i_m_single(m, t - eps2, cfg, z))

    def integrand(sig):
        sig = np.atleast_1d(sig)
        return (sig - 0.5) ** m * zeta_log_deriv_batch(sig + 1j * t)

    tail_at = cfg.tail_sigma_max
    bps = [0.5 + h for h in (5e-4, 2e-3, 1e-2, 0.05, 0.2)]
    bps += [1.0, 2.0, 4.0, 8.0, 16.0]
    if near is not None and 0.0 < near < 0.05:
        bps += [0.5 + near * f for f in (0.5, 1.0, 2.0, 8.0)]
    val, _ = integrate(integrand, 0.5, tail_at, cfg, breakpoints=bps)
    pref = 1j ** m / math.factorial(m)
    return float(-(pref * val).imag / math.pi)


def i_m_tail_bound(m: int, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Bound on the |contribution of [tail_sigma_max, inf)| to i_m_single."""
    return _dirichlet_tail(m, cfg.tail_sigma_max) / (math.pi * math.factorial(m))


@dataclass
class SmEvaluation:
    """Both routes to S_m at one point, with their discrepancy."""

    m: int
    t: float
    value_iterated: float
    value_single: float
    discrepancy: float
    at_ordinate: bool


def sm_crosscheck(m: int, t: float, cfg: QuadratureConfig = DEFAULT_CONFIG,
                  z: ZeroTable | None = None) -> SmEvaluation:
    """Evaluate S_m through both routes and report the discrepancy.

    For m = 0 the "iterated" value is S itself (argument principle) and
    the single-integral value is the m = 0 instance of the sigma-integral,
    i.e. the same argument tracked along the horizontal ray only.
    """
    if z is None:
        raise DomainError("sm_crosscheck needs a zero table")
    at_ord = t <= z.last and z.nearest_distance(t) < cfg.zero_exclusion_eps
    if m == 0:
        vi = s_of_t(t, cfg, z)
        if at_ord:
            eps2 = 2.0 * cfg.zero_exclusion_eps
            vs = 0.5 * (i_m_single(0, t + eps2, cfg, z)
                        + i_m_single(0, t - eps2, cfg, z))
        else:
            vs = i_m_single(0, t, cfg, z)
    else:
        vi = s_m_iterated(m, t, cfg, z)
        vs = i_m_single(m, t, cfg, z)
    return SmEvaluation(m=m, t=t, value_iterated=vi, value_single=vs,
                        discrepancy=abs(vi - vs), at_ordinate=bool(at_ord))
