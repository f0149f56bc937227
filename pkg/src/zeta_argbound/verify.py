"""The full self-verification suite behind `zeta-argbound verify`.

Each check exercises one finite-precision-checkable identity, bound, or
invariant exposed by the library and yields a CheckResult with a PASS,
WARN, or FAIL status.  WARN is reserved for checks whose achievable floor
is truncation-limited rather than accuracy-limited (explicit-formula
residuals under user-tightened tolerances, and the asymptotic envelope
margins, whose leading-term bound carries an unspecified lower-order
correction): they are reported, never silently passed, and never abort
the run.  Exceptions inside a check are caught and reported as FAIL.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import envelope as env
from . import mollifier as mol
from . import sfunctions as sf
from . import zeros as zr
from . import zetacore as zc
from .numutil import EULER_GAMMA
from .quadrature import DEFAULT_CONFIG, QuadratureConfig

_RNG_SEED = 27182818

# Truncation-limited residual thresholds at default tolerances.
_RESIDUAL_THRESHOLD = 0.05
_PSI_100 = 94.04531122935739          # sum of Lambda(n) for n <= 100
_THETA_10 = -3.0670743962898953


@dataclass
class CheckResult:
    name: str
    status: str                 # PASS | WARN | FAIL
    value: float
    tolerance: float
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if c.status == "FAIL")

    @property
    def warned(self) -> int:
        return sum(1 for c in self.checks if c.status == "WARN")

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.status == "PASS")


def _random_t_away_from_ordinates(z, rng, n, lo, hi, min_dist):
    out = []
    while len(out) < n:
        t = float(rng.uniform(lo, hi))
        if z.nearest_distance(t) >= min_dist:
            out.append(t)
    return out


def run_verification(z: zr.ZeroTable, tbl: mol.MangoldtTable,
                     cfg: QuadratureConfig = DEFAULT_CONFIG) -> VerifyReport:
    """Run every check against the given zero table and Mangoldt table."""
    report = VerifyReport()
    t0 = time.time()
    rng = np.random.default_rng(_RNG_SEED)
    # Residual checks are truncation-limited: tightening the quadrature
    # tolerance shrinks their threshold so they warn instead of passing.
    residual_tol = _RESIDUAL_THRESHOLD * min(1.0, cfg.rel_tol / DEFAULT_CONFIG.rel_tol)

    def add(name, ok, value, tol, detail="", warn_if=None):
        status = "PASS" if ok else ("WARN" if warn_if else "FAIL")
        report.checks.append(CheckResult(name, status, float(value),
                                         float(tol), detail))

    def guarded(name, fn):
        try:
            fn()
        except Exception as exc:  # report, never propagate
            report.checks.append(CheckResult(
                name, "FAIL", math.nan, math.nan,
                f"raised {type(exc).__name__}: {exc}"))

    # ----------------------------------------------------------- zeta core
    def zeta_classical():
        e1 = abs(zc.zeta(2.0 + 0j, cfg) - math.pi ** 2 / 6.0)
        e2 = abs(zc.zeta(0.0 + 0j, cfg) - (-0.5))
        add("zeta-classical-values", max(e1, e2) < 1e-12, max(e1, e2), 1e-12)
    guarded("zeta-classical-values", zeta_classical)

    def zeta_conjugate():
        worst = 0.0
        for _ in range(100):
            s = complex(rng.uniform(0.5, 3.0), rng.uniform(-50.0, 50.0))
            a = zc.zeta(s, cfg)
            b = zc.zeta(s.conjugate(), cfg)
            worst = max(worst, abs(b - a.conjugate()) / max(abs(a), 1e-30))
        add("zeta-conjugate-symmetry", worst <= cfg.rel_tol, worst, cfg.rel_tol)
    guarded("zeta-conjugate-symmetry", zeta_conjugate)

    def zeta_real_axis():
        worst = max(abs(zc.zeta(complex(sig), cfg).imag)
                    for sig in (1.5, 2.0, 3.0, 5.0, 10.0))
        add("zeta-real-axis-reality", worst <= cfg.abs_tol, worst, cfg.abs_tol)
    guarded("zeta-real-axis-reality", zeta_real_axis)

    def zld_fd():
        h = 1e-5
        worst = 0.0
        for sig in (1.0, 1.5, 2.0, 2.5):
            for t in (5.0, 18.0, 27.0, 47.0, 62.0):
                s = complex(sig, t)
                fd = (zc.zeta(s + h, cfg) - zc.zeta(s - h, cfg)) / (2 * h * zc.zeta(s, cfg))
                worst = max(worst, abs(zc.zeta_log_deriv(s, cfg) - fd))
        add("zeta-derivative-consistency", worst < 1e-6, worst, 1e-6,
            "central difference, h=1e-5, 20-point grid")
    guarded("zeta-derivative-consistency", zld_fd)

    def zeta_first_zero():
        val = abs(zc.zeta(complex(0.5, float(z.ordinates[0])), cfg))
        add("zeta-at-first-zero", val < 1e-6, val, 1e-6)
    guarded("zeta-at-first-zero", zeta_first_zero)

    def zld_dirichlet():
        partial = math.fsum(lam / n ** 2 for n, lam in tbl.values.items())
        # Chebyshev-style tail: sum_{n>N} Lambda(n)/n^2 <= ~2.1/N.
        tail = 2.1 / tbl.limit
        diff = abs(zc.zeta_log_deriv(2.0 + 0j, cfg) + partial)
        add("zld-dirichlet-series", diff <= 1e-10 + tail, diff, 1e-10 + tail,
            f"truncated at N={tbl.limit}, tail bound {tail:.2e}")
    guarded("zld-dirichlet-series", zld_dirichlet)

    def zld_tail():
        val = abs(zc.zeta_log_deriv(30.0 + 0j, cfg))
        add("zld-large-sigma-tail", val < 1e-8, val, 1e-8)
    guarded("zld-large-sigma-tail", zld_tail)

    def digamma_classical():
        e1 = abs(zc.digamma(1.0 + 0j) + EULER_GAMMA)
        e2 = abs(zc.digamma(0.5 + 0j) + EULER_GAMMA + 2 * math.log(2.0))
        big = zc.digamma((0.6 + 1000j) / 2 + 1)
        ok3 = abs(big) <= math.log(1000.0) + 2.0
        add("digamma-classical-values", max(e1, e2) < 1e-10 and ok3,
            max(e1, e2), 1e-10)
    guarded("digamma-classical-values", digamma_classical)

    def theta_values():
        err = abs(zc.riemann_siegel_theta(10.0) - _THETA_10)
        grow = zc.riemann_siegel_theta(1000.0) > zc.riemann_siegel_theta(100.0)
        add("theta-value-and-growth", err < 1e-8 and grow, err, 1e-8)
    guarded("theta-value-and-growth", theta_values)

    def theta_counting():
        ok = True
        for t in (20.0, 50.0, 100.0):
            n = round(zc.riemann_siegel_theta(t) / math.pi + 1.0
                      + sf.s_of_t(t, cfg, z))
            ok = ok and (n == zr.count_zeros_below(z, t))
        add("theta-counting-consistency", ok, 0.0 if ok else 1.0, 0.0,
            "round(theta/pi + 1 + S) vs table count at t in {20,50,100}")
    guarded("theta-counting-consistency", theta_counting)

    # ---------------------------------------------------------- arithmetic
    def mangoldt_exact():
        ok = (tbl.lambda_at(8) == math.log(2.0) and tbl.lambda_at(12) == 0.0)
        psi = math.fsum(lam for n, lam in tbl.values.items() if n <= 100)
        err = abs(psi - _PSI_100)
        add("mangoldt-exactness", ok and err < 1e-9, err, 1e-9)
    guarded("mangoldt-exactness", mangoldt_exact)

    def taper_bounds():
        p = mol.MollifierParams.from_scale(50.0)
        worst = 0.0
        ok = True
        for n, lam in tbl.values.items():
            if n >= 2500:
                continue
            lx = mol.lambda_X(n, p, tbl)
            ok = ok and (-1e-15 <= lx <= lam + 1e-15)
            if n <= 50:
                worst = max(worst, abs(lx - lam))
        # continuity at the scale boundary: both branch formulas at n = X = 13
        lo = tbl.lambda_at(13)
        hi = tbl.lambda_at(13) * math.log(13.0 ** 2 / 13) / math.log(13.0)
        cont = abs(lo - hi) / lo
        add("mollifier-taper-bounds", ok and worst == 0.0 and cont < 1e-15,
            max(worst, cont), 1e-15, "taper never amplifies; continuous at n=X")
    guarded("mollifier-taper-bounds", taper_bounds)

    def dirichlet_majorant():
        worst_c = 0.0
        ok = True
        for X in (4.0, 10.0, 20.0, 50.0, 100.0, 200.0):
            p = mol.MollifierParams.from_scale(X)
            nvals, lam, logn = mol._taper_arrays(p, tbl)
            plain = np.array([tbl.values[int(n)] for n in nvals])
            major = (np.sum(plain[nvals < X] / np.sqrt(nvals[nvals < X]))
                     + np.sum(lam[nvals >= X] / np.sqrt(nvals[nvals >= X])))
            for t in (0.0, 10.0, 100.0, 1000.0):
                mag = abs(mol.dirichlet_sum(p, complex(p.sigma1, t), tbl))
                ok = ok and (mag <= major * (1 + 1e-12))
                worst_c = max(worst_c, mag * math.log(X) / X)
        add("dirichlet-sum-majorant", ok and worst_c <= 3.0, worst_c, 3.0,
            "termwise majorant and fitted X/log X constant")
    guarded("dirichlet-sum-majorant", dirichlet_majorant)

    def moment_identity():
        worst = 0.0
        for m in (1, 2, 3, 4):
            for X in (4.0, 10.0, 50.0):
                p = mol.MollifierParams.from_scale(X)
                for t in (0.0, 10.0, 100.0):
                    worst = max(worst, mol.dirichlet_moment_identity(
                        p, t, m, tbl, cfg))
        add("dirichlet-moment-identity", worst < 1e-8, worst, 1e-8,
            "m in 1..4, X in {4,10,50}, t in {0,10,100}")
    guarded("dirichlet-moment-identity", moment_identity)

    # --------------------------------------------------------------- zeros
    def table_gate():
        err = abs(float(z.ordinates[0]) - 14.134725141734694)
        add("zero-table-sanity", z.count >= 100 and err < 1e-5, err, 1e-5,
            f"count={z.count}")
    guarded("zero-table-sanity", table_gate)

    def counting_inversion():
        ok = True
        for t in _random_t_away_from_ordinates(z, rng, 50, 15.0, z.last - 1.0,
                                               5 * cfg.zero_exclusion_eps):
            n = round(zc.riemann_siegel_theta(t) / math.pi + 1.0
                      + zr.s_via_counting(z, t, cfg.zero_exclusion_eps))
            ok = ok and n == zr.count_zeros_below(z, t)
        add("counting-inversion-consistency", ok, 0.0 if ok else 1.0, 0.0,
            "50 random t")
    guarded("counting-inversion-consistency", counting_inversion)

    def hadamard_truncation():
        s = 2.0 + 5.0j
        r25 = zr.hadamard_residual(s, z, 25, cfg)
        r50 = zr.hadamard_residual(s, z, 50, cfg)
        r100 = zr.hadamard_residual(s, z, 100, cfg)
        mono = r25.residual > r50.residual > r100.residual
        under_tail = r100.residual <= r100.tail_bound
        ok = mono and under_tail and r100.residual < residual_tol
        add("hadamard-expansion-residual", ok, r100.residual, residual_tol,
            f"monotone={mono}, tail bound {r100.tail_bound:.3g}",
            warn_if=mono and under_tail)
    guarded("hadamard-expansion-residual", hadamard_truncation)

    def selberg_grid():
        worst = 0.0
        tail_ok = True
        for s in (2.0 + 20.0j, 2.0 + 30.0j, 3.0 + 40.0j):
            for X in (4.0, 10.0, 50.0):
                p = mol.MollifierParams.from_scale(X)
                r = zr.selberg_residual(s, p, z, 100, 50, tbl, cfg)
                worst = max(worst, r.residual)
                tail_ok = tail_ok and r.residual <= max(r.tail_bound, 1e-6)
        add("selberg-formula-residual", worst < residual_tol and tail_ok,
            worst, residual_tol, "3x3 grid of (s, X), 100 zeros, qmax 50",
            warn_if=tail_ok)
    guarded("selberg-formula-residual", selberg_grid)

    def bracket_checks():
        ok = True
        for t, X in ((50.0, 10.0), (100.0, math.log(100.0)), (50.0, 4.0)):
            p = mol.MollifierParams.from_scale(max(X, 4.0))
            ok = ok and zr.lorentz_bracket_check(t, p, z, tbl).margin_ok
        add("lorentz-sum-bracket", ok, 0.0 if ok else 1.0, 0.0,
            "zero sum vs (1/2)log t window, slack 5|dirichlet|")
    guarded("lorentz-sum-bracket", bracket_checks)

    def lorentz_peak():
        p = mol.MollifierParams.from_scale(10.0)
        g5 = float(z.ordinates[4])
        val = zr.zero_lorentz_sum(z, g5, p)
        add("lorentz-sum-peak", val >= 1.0 / p.delta, val, 1.0 / p.delta,
            "sum at t = gamma_5 dominated by the 1/Delta term")
    guarded("lorentz-sum-peak", lorentz_peak)

    # ----------------------------------------------------------- s-functions
    def argument_vs_counting():
        worst = 0.0
        for t in _random_t_away_from_ordinates(z, rng, 20, 15.0, 100.0,
                                               5 * cfg.zero_exclusion_eps):
            worst = max(worst, abs(sf.s_of_t(t, cfg, z)
                                   - zr.s_via_counting(z, t, cfg.zero_exclusion_eps)))
        add("argument-vs-counting", worst < 2e-4, worst, 2e-4,
            "20 random t in [15, 100]")
    guarded("argument-vs-counting", argument_vs_counting)

    def cm_exact():
        e1 = abs(sf.constant_Cm(2, cfg).value - 0.125)
        e2 = abs(sf.constant_Cm(4, cfg).value - (-1.0 / 384.0))
        add("iteration-constants-exact", max(e1, e2) == 0.0, max(e1, e2), 0.0)
    guarded("iteration-constants-exact", cm_exact)

    def sm_identity():
        worst = 0.0
        for m in (1, 2, 3, 4):
            for t in (10.0, 30.0, 100.0):
                worst = max(worst, sf.sm_crosscheck(m, t, cfg, z).discrepancy)
        add("iterated-vs-single-integral", worst < 1e-2, worst, 1e-2,
            "m in 1..4, t in {10,30,100}")
    guarded("iterated-vs-single-integral", sm_identity)

    def jump_structure():
        worst = 0.0
        for g in z.ordinates[:3]:
            jump = (sf.s_of_t(float(g) + 1e-3, cfg, z)
                    - sf.s_of_t(float(g) - 1e-3, cfg, z))
            worst = max(worst, abs(jump - 1.0))
        add("argument-jump-structure", worst < 0.05, worst, 0.05,
            "jump across the first three ordinates")
    guarded("argument-jump-structure", jump_structure)

    def s1_continuity():
        g1 = float(z.ordinates[0])
        gap = abs(sf.s_m_iterated(1, g1 + 1e-4, cfg, z)
                  - sf.s_m_iterated(1, g1 - 1e-4, cfg, z))
        add("iterated-continuity", gap < 1e-3, gap, 1e-3)
    guarded("iterated-continuity", s1_continuity)

    def path_independence():
        worst = max(abs(sf.s_of_t(t, cfg, z, corner=3.0)
                        - sf.s_of_t(t, cfg, z, corner=2.0))
                    for t in (10.0, 50.0, 100.0))
        add("path-independence", worst < 1e-8, worst, 1e-8,
            "corner moved from sigma=2 to sigma=3")
    guarded("path-independence", path_independence)

    # ------------------------------------------------------------- envelope
    def constant_crosscheck():
        k1 = env.theorem_constant(1).k_total
        ok = 0.505 <= k1 <= 0.515
        add("envelope-constant-vs-cited", ok, k1, 0.515,
            f"published cross-check {env.REFERENCE_BOUNDS['fujii_s1']}")
    guarded("envelope-constant-vs-cited", constant_crosscheck)

    def decomposition():
        worst = 0.0
        for m in range(1, 9):
            c = env.theorem_constant(m)
            rebuilt = (c.a_sum + c.j2_term + c.j3_term) / (2.0 * math.pi
                                                           * math.factorial(m))
            worst = max(worst, abs(c.k_total - rebuilt))
        add("envelope-decomposition", worst == 0.0, worst, 0.0,
            "stored k_total identical to the reassembled blocks")
    guarded("envelope-decomposition", decomposition)

    def kernel_grid():
        worst = 0.0
        for m in (1, 3, 5, 7):
            for d in (0.1, 0.3, 0.5, 0.72):
                for b in (0.0, 0.05, 0.3, 1.5):
                    kp = env.KernelParams(m=m, delta=d, b=b)
                    worst = max(worst, abs(env.k_gamma_closed(kp)
                                           - env.k_gamma_quadrature(kp, cfg)))
        add("kernel-closed-vs-quadrature", worst < 1e-10, worst, 1e-10,
            "64-point (m, Delta, B) grid including B=0")
    guarded("kernel-closed-vs-quadrature", kernel_grid)

    def g_shape():
        ok = True
        worst_lim = 0.0
        ys = np.logspace(-3, 3, 60)
        for m in (1, 3, 5):
            vals = [env.g_kernel(env.KernelParams.from_ratio(m, float(y)))
                    for y in ys]
            top = 2.0 / (m * (m + 2))
            ok = ok and all(-1e-15 <= v <= top + 1e-12 for v in vals)
            ok = ok and all(vals[i + 1] <= vals[i] + 1e-13
                            for i in range(len(vals) - 1))
            lim = env.g_kernel(env.KernelParams.from_ratio(m, 1e-8))
            worst_lim = max(worst_lim, abs(lim - top))
        add("g-kernel-bounds-monotone", ok and worst_lim < 1e-9,
            worst_lim, 1e-9, "m in {1,3,5}, 60-point log grid")
    guarded("g-kernel-bounds-monotone", g_shape)

    def g_branches():
        worst = 0.0
        for m in (1, 3, 5):
            for y in np.linspace(0.125, 0.5, 20):
                worst = max(worst, abs(env._g_series(m, float(y))
                                       - env._g_closed(m, float(y))))
        add("g-kernel-branch-agreement", worst < 1e-9, worst, 1e-9,
            "series vs closed form on [switch/2, 2 switch]")
    guarded("g-kernel-branch-agreement", g_branches)

    def partial_integration():
        worst = 0.0
        for m in (1, 2, 3, 4):
            for X in (4.0, 10.0, 100.0):
                worst = max(worst, env.partial_integration_identity(m, X, cfg))
        add("partial-integration-identity", worst < 1e-10, worst, 1e-10,
            "m in 1..4, X in {4,10,100}")
    guarded("partial-integration-identity", partial_integration)

    def envelope_margins():
        ts = np.exp(np.linspace(math.log(100.0), math.log(3000.0), 30))
        detail_parts = []
        worst = 0.0
        for m in (1, 2, 3):
            ratios = [abs(sf.i_m_single(m, float(t), cfg, z))
                      / env.envelope_bound(m, float(t)) for t in ts]
            mx = max(ratios)
            worst = max(worst, mx)
            detail_parts.append(f"m={m}:max={mx:.3f}")
        # The bound is asymptotic with an unspecified lower-order term;
        # ratios above 1 at desk scale are recorded, not failed.
        add("envelope-dominance-margins", worst < 1.0, worst, 1.0,
            "; ".join(detail_parts), warn_if=True)
    guarded("envelope-dominance-margins", envelope_margins)

    report.elapsed = time.time() - t0
    return report


def format_report(report: VerifyReport) -> str:
    lines = []
    for c in report.checks:
        val = "nan" if math.isnan(c.value) else f"{c.value:.6g}"
        tol = "-" if math.isnan(c.tolerance) else f"{c.tolerance:.6g}"
        line = f"{c.status:<4} {c.name:<32} value={val} tol={tol}"
        if c.detail:
            line += f"  [{c.detail}]"
        lines.append(line)
    lines.append(
        f"SUMMARY checks={len(report.checks)} pass={report.passed} "
        f"warn={report.warned} fail={report.failed} "
        f"elapsed={report.elapsed:.1f}s")
    return "\n".join(lines)
