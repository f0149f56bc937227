"""Zero-ordinate tables and the classical explicit-formula residuals.

Zeros are ingested from a published table, never computed: the bundled
file carries the first 100 ordinates of the nontrivial zeros.  On top of
the table this module provides

* zero counting and the counting-formula route to S(t),
* the Lorentzian zero sum  sum_gamma Delta / (Delta^2 + (t-gamma)^2),
* truncation residuals of two classical identities for zeta'/zeta --
  the Hadamard partial-fraction expansion (digamma form) and Selberg's
  mollified explicit formula -- each reported together with an analytic
  bound on the discarded zero tail,
* the bracket check tying the Lorentzian sum to (1/2) log t.

Every zero sum pairs the ordinates +gamma and -gamma explicitly, which
keeps conjugate symmetry exact.  All bundled zeros are treated as simple
(true for the bundled range).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .errors import (AtOrdinateError, CoverageError, DomainError,
                     ZeroTableFormatError)
from .mollifier import MangoldtTable, MollifierParams, dirichlet_sum
from .numutil import EULER_GAMMA, csum_array, rsum
from .quadrature import DEFAULT_CONFIG, QuadratureConfig
from .zetacore import digamma, riemann_siegel_theta, zeta_log_deriv

Q_BAR = (1.0 / math.e) * (1.0 + 1.0 / math.e)


@dataclass(eq=False)
class ZeroTable:
    """Ascending positive zero ordinates with provenance."""

    ordinates: np.ndarray
    source: str
    count: int

    def __post_init__(self):
        arr = np.asarray(self.ordinates, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ZeroTableFormatError("zero table must be a nonempty 1-d list")
        if not np.all(np.diff(arr) > 0.0):
            raise ZeroTableFormatError("zero ordinates must be strictly ascending")
        if arr[0] <= 0.0:
            raise ZeroTableFormatError("zero ordinates must be positive")
        arr = arr.copy()
        arr.setflags(write=False)
        self.ordinates = arr
        self.count = int(arr.size)

    @property
    def last(self) -> float:
        return float(self.ordinates[-1])

    def nearest_distance(self, t: float) -> float:
        """Distance from t to the nearest tabulated ordinate."""
        i = int(np.searchsorted(self.ordinates, t))
        cands = []
        if i < self.count:
            cands.append(abs(float(self.ordinates[i]) - t))
        if i > 0:
            cands.append(abs(t - float(self.ordinates[i - 1])))
        return min(cands)


def load_zero_table(path) -> ZeroTable:
    """Parse a zero-ordinate text file (one decimal per line, # comments).

    Ingestion is strict: parse failures carry the line number, ordering
    violations and empty files are rejected, and the leading ordinate is
    gated against the known first zero near 14.1347.
    """
    values: list[float] = []
    header: list[str] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                header.append(line.lstrip("# "))
                continue
            try:
                values.append(float(line))
            except ValueError:
                raise ZeroTableFormatError(
                    f"{path}:{lineno}: not a decimal literal: {line!r}")
            if values[-1] <= 0.0:
                raise ZeroTableFormatError(
                    f"{path}:{lineno}: ordinate must be positive")
            if len(values) >= 2 and values[-1] <= values[-2]:
                raise ZeroTableFormatError(
                    f"{path}:{lineno}: ordering violation "
                    f"({values[-1]} after {values[-2]})")
    if not values:
        raise ZeroTableFormatError(f"{path}: no ordinates found")
    if values[0] <= 14.0:
        raise ZeroTableFormatError(
            f"{path}: first ordinate {values[0]} not > 14")
    if abs(values[0] - 14.1347) > 1e-3:
        raise ZeroTableFormatError(
            f"{path}: first ordinate {values[0]} fails the 14.1347 sanity gate")
    source = header[0] if header else str(path)
    return ZeroTable(ordinates=np.array(values), source=source,
                     count=len(values))


def bundled_zero_table() -> ZeroTable:
    """The packaged 100-ordinate table."""
    ref = resources.files("zeta_argbound") / "data" / "zeros100.txt"
    with resources.as_file(ref) as path:
        return load_zero_table(path)


def count_zeros_below(z: ZeroTable, t: float) -> int:
    """Number of tabulated ordinates strictly below t (multiplicity 1)."""
    if t > z.last:
        raise CoverageError(
            f"t={t} beyond zero-table coverage (last ordinate {z.last:.4f})")
    return int(np.searchsorted(z.ordinates, t, side="left"))


def s_via_counting(z: ZeroTable, t: float,
                   eps: float = DEFAULT_CONFIG.zero_exclusion_eps) -> float:
    """S(t) inverted from the counting formula N(t) = theta(t)/pi + 1 + S(t)."""
    if t < 2.0:
        raise DomainError(f"s_via_counting requires t >= 2, got {t}")
    n = count_zeros_below(z, t)
    if z.nearest_distance(t) < eps:
        raise AtOrdinateError(
            f"t={t} within {eps} of a zero ordinate; use the two-sided "
            f"midpoint convention")
    return n - 1.0 - riemann_siegel_theta(t) / math.pi


def zero_density_tail(gamma_hi: float, t: float) -> float:
    """Upper estimate of sum over zeros above gamma_hi of 1/(gamma - |t|)^2.

    Uses the smooth density majorant (1/2pi) log(u/2pi) + 1 zeros per unit
    length, integrated in closed form.  Requires |t| <= 0.9 * gamma_hi.
    """
    T = abs(t)
    if T >= 0.9 * gamma_hi:
        raise CoverageError(
            f"tail estimate needs |t|={T} well below coverage {gamma_hi}")
    base = 1.0 / (gamma_hi - T)
    if T == 0.0:
        smooth = (math.log(gamma_hi / (2 * math.pi)) + 1.0) / gamma_hi
    else:
        smooth = (math.log(gamma_hi / (2 * math.pi)) / (gamma_hi - T)
                  + math.log(gamma_hi / (gamma_hi - T)) / T)
    return smooth / (2 * math.pi) + base


def zero_lorentz_sum(z: ZeroTable, t: float, p: MollifierParams) -> float:
    """sum over +/-gamma of Delta / (Delta^2 + (t - gamma)^2).

    Requires table coverage of at least 2t so the truncated tail (see
    zero_lorentz_tail_bound) stays controlled.
    """
    if z.last < 2.0 * abs(t):
        raise CoverageError(
            f"lorentz sum at t={t} needs coverage >= {2 * abs(t):.1f}, "
            f"table ends at {z.last:.1f}")
    g = z.ordinates
    d = p.delta
    terms = d / (d * d + (t - g) ** 2) + d / (d * d + (t + g) ** 2)
    return rsum(terms.tolist())


def zero_lorentz_tail_bound(z: ZeroTable, t: float,
                            p: MollifierParams) -> float:
    """Analytic bound on the part of the Lorentzian sum beyond the table."""
    return 2.0 * p.delta * zero_density_tail(z.last, t)


@dataclass
class ResidualReport:
    """Assembled two sides of an identity with their truncation residual."""

    lhs: complex
    rhs: complex
    residual: float
    truncation: int
    qmax: int
    tail_bound: float


def hadamard_residual(s: complex, z: ZeroTable, nzeros: int,
                      cfg: QuadratureConfig = DEFAULT_CONFIG) -> ResidualReport:
    """Residual of the partial-fraction (digamma) expansion of zeta'/zeta:

    zeta'/zeta(s) = log 2pi - 1 - E/2 - 1/(s-1) - (1/2) psi(s/2 + 1)
                    + sum_rho (1/(s-rho) + 1/rho),

    zeros paired +/-gamma and truncated at ``nzeros``.  The report carries
    an analytic bound on the discarded tail; with a finite table the
    residual is expected to sit below that bound, not at zero.
    """
    s = complex(s)
    if nzeros < 1 or nzeros > z.count:
        raise CoverageError(f"nzeros={nzeros} outside table size {z.count}")
    g = z.ordinates[:nzeros]
    if np.min(np.abs(g - s.imag)) < 1e-6 and abs(s.real - 0.5) < 1e-6:
        raise DomainError(f"s={s} within 1e-6 of a listed zero")
    lhs = zeta_log_deriv(s, cfg)
    a = s - 0.5
    pairs = 2.0 * a / (a * a + g * g) + 1.0 / (0.25 + g * g)
    rhs = (math.log(2 * math.pi) - 1.0 - EULER_GAMMA / 2.0 - 1.0 / (s - 1.0)
           - 0.5 * digamma(s / 2.0 + 1.0) + csum_array(pairs))
    tail = (2.0 * abs(a) + 1.0) * zero_density_tail(float(g[-1]), s.imag)
    return ResidualReport(lhs=lhs, rhs=rhs, residual=abs(lhs - rhs),
                          truncation=nzeros, qmax=0, tail_bound=tail)


def selberg_residual(s: complex, p: MollifierParams, z: ZeroTable,
                     nzeros: int, qmax: int, tbl: MangoldtTable,
                     cfg: QuadratureConfig = DEFAULT_CONFIG) -> ResidualReport:
    """Residual of Selberg's mollified explicit formula for zeta'/zeta:

    zeta'/zeta(s) = -sum_{n<X^2} Lambda_X(n) n^-s
                    + (X^{2(1-s)} - X^{1-s}) / ((1-s)^2 log X)
                    + (1/log X) sum_{q>=1} (X^{-2q-s} - X^{-2(2q+s)}) / (2q+s)^2
                    + (1/log X) sum_rho (X^{rho-s} - X^{2(rho-s)}) / (s-rho)^2,

    with the trivial-zero sum cut at ``qmax`` and the zero sum at
    ``nzeros`` conjugate pairs.
    """
    s = complex(s)
    if s.real < 0.5:
        raise DomainError(f"selberg_residual requires Re s >= 1/2, got {s}")
    if nzeros < 1 or nzeros > z.count:
        raise CoverageError(f"nzeros={nzeros} outside table size {z.count}")
    if qmax < 1:
        raise DomainError("qmax must be >= 1")
    lx = math.log(p.X)
    lhs = zeta_log_deriv(s, cfg)

    main = (p.X ** (2 * (1 - s)) - p.X ** (1 - s)) / ((1 - s) ** 2 * lx)
    q = np.arange(1, qmax + 1, dtype=float)
    qterms = (p.X ** (-2 * q - s) - p.X ** (-2 * (2 * q + s))) / (2 * q + s) ** 2
    qsum = csum_array(qterms) / lx

    g = z.ordinates[:nzeros]
    rho = 0.5 + 1j * g
    zterms = ((p.X ** (rho - s) - p.X ** (2 * (rho - s))) / (s - rho) ** 2
              + (p.X ** (np.conj(rho) - s) - p.X ** (2 * (np.conj(rho) - s)))
              / (s - np.conj(rho)) ** 2)
    zsum = csum_array(zterms) / lx

    rhs = -dirichlet_sum(p, s, tbl) + main + qsum + zsum

    xfac = p.X ** (0.5 - s.real) + p.X ** (1.0 - 2 * s.real)
    ztail = 2.0 * xfac / lx * zero_density_tail(float(g[-1]), s.imag)
    qnext = 2 * (qmax + 1)
    qtail = 2.0 * p.X ** (-qnext - s.real) / (qnext ** 2 * lx) / (1 - p.X ** -2)
    return ResidualReport(lhs=lhs, rhs=rhs, residual=abs(lhs - rhs),
                          truncation=nzeros, qmax=qmax,
                          tail_bound=ztail + qtail)


@dataclass
class BracketCheck:
    """Lorentzian zero sum versus the (1/2) log t window it must occupy."""

    lhs: float
    main: float
    dirichlet_bound: float
    lo: float
    hi: float
    margin_ok: bool


def lorentz_bracket_check(t: float, p: MollifierParams, z: ZeroTable,
                          tbl: MangoldtTable, slack: float = 5.0) -> BracketCheck:
    """Check that the Lorentzian zero sum lies in the interval implied by

        sum_gamma Delta/(Delta^2+(t-gamma)^2)
            = (1/2) log t / (1 - qbar * w') + O(|sum Lambda_X n^{-sigma_1-it}|)

    with w' ranging over [-1, 1] and qbar = (1/e)(1 + 1/e).  The
    uncomputable O-term is absorbed by ``slack`` times the Dirichlet-sum
    magnitude, so this is a bracket test rather than an equality.
    """
    if t < 10.0:
        raise DomainError(f"bracket check requires t >= 10, got {t}")
    lhs = zero_lorentz_sum(z, t, p)
    main = 0.5 * math.log(t)
    dmag = abs(dirichlet_sum(p, p.sigma1 + 1j * t, tbl))
    lo = main / (1.0 + Q_BAR) - slack * dmag
    hi = main / (1.0 - Q_BAR) + slack * dmag
    return BracketCheck(lhs=lhs, main=main, dirichlet_bound=dmag,
                        lo=lo, hi=hi, margin_ok=bool(lo <= lhs <= hi))
