"""Verification toolkit for explicit bounds on the iterated argument
function of the Riemann zeta function.

The package computes S(t) by the argument principle, the iterated
integrals S_m(t) and their single-integral twin I_m(t), the integration
constants C_m, the explicit envelope constants K_m with their kernel
objects, and the classical explicit-formula residuals over a bundled
table of zero ordinates.  Everything finite-precision-checkable is
exercised by the `zeta-argbound verify` command and the test suite.
"""

from .envelope import (EnvelopeConstants, KernelParams, REFERENCE_BOUNDS,
                       envelope_bound, g_kernel, k_gamma_closed,
                       k_gamma_quadrature, partial_integration_identity,
                       theorem_constant)
from .errors import (AtOrdinateError, CoverageError, DomainError,
                     NearSingularityError, NonConvergenceError, PoleError,
                     ResourceError, ZeroTableFormatError, ZetaArgboundError)
from .mollifier import (MangoldtTable, MollifierParams, build_mangoldt,
                        dirichlet_moment_identity, dirichlet_sum, lambda_X,
                        weighted_dirichlet_sum)
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate
from .sfunctions import (CmConstant, SmEvaluation, constant_Cm, i_m_single,
                         i_m_tail_bound, s_m_iterated, s_of_t, sm_crosscheck)
from .zeros import (BracketCheck, ResidualReport, ZeroTable,
                    bundled_zero_table, count_zeros_below, hadamard_residual,
                    load_zero_table, lorentz_bracket_check, s_via_counting,
                    selberg_residual, zero_lorentz_sum,
                    zero_lorentz_tail_bound)
from .zetacore import (digamma, riemann_siegel_theta, zeta, zeta_log_deriv)

__version__ = "0.1.0"

__all__ = [
    "AtOrdinateError", "BracketCheck", "CmConstant", "CoverageError",
    "DEFAULT_CONFIG", "DomainError", "EnvelopeConstants", "KernelParams",
    "MangoldtTable", "MollifierParams", "NearSingularityError",
    "NonConvergenceError", "PoleError", "QuadratureConfig",
    "REFERENCE_BOUNDS", "ResidualReport", "ResourceError", "SmEvaluation",
    "ZeroTable", "ZeroTableFormatError", "ZetaArgboundError",
    "build_mangoldt", "bundled_zero_table", "constant_Cm",
    "count_zeros_below", "digamma", "dirichlet_moment_identity",
    "dirichlet_sum", "envelope_bound", "g_kernel", "hadamard_residual",
    "i_m_single", "i_m_tail_bound", "integrate", "k_gamma_closed",
    "k_gamma_quadrature", "lambda_X", "load_zero_table",
    "lorentz_bracket_check", "partial_integration_identity",
    "riemann_siegel_theta", "s_m_iterated", "s_of_t", "s_via_counting",
    "selberg_residual", "sm_crosscheck", "theorem_constant",
    "weighted_dirichlet_sum", "zero_lorentz_sum", "zero_lorentz_tail_bound",
    "zeta", "zeta_log_deriv",
]
