"""Best constant of the Markov inequality in the Laguerre-weighted L2 norm.

The squared constant is the largest eigenvalue of an explicit symmetric
positive definite matrix; this package builds that matrix, solves it with a
residual certificate, evaluates every closed-form bound on the constant,
realizes the large-degree Bessel-zero asymptotics, and cross-checks the whole
chain against an independent Gauss-Laguerre quadrature oracle.
"""

__version__ = "0.1.0"

from .gamma_kernel import AlphaParam, BetaTable, beta_ratio, log_beta_sq
from .matrix_builder import MarkovMatrix, TriangularFactor, build_a, build_c_factor
from .spectral import ConvergenceError, SpectralResult, full_spectrum, markov_constant, mu_max_power
from .bounds_catalog import BoundId, BoundsReport, bounds_report, charpoly_coeffs, evaluate_bound
from .bessel_asymptotics import alpha_star, asymptotic_constant, bessel_j, estimate_c_numeric, first_positive_zero
from .oracle_quadrature import LaguerreExpansion, QuadratureRule, extremal_from_eigenvector, gauss_laguerre, rayleigh_quotient
from .verify_harness import GridSpec, SweepReport, run_suite, verify_cor13, verify_integral_lemma

__all__ = [
    "AlphaParam",
    "BetaTable",
    "BoundId",
    "BoundsReport",
    "ConvergenceError",
    "GridSpec",
    "LaguerreExpansion",
    "MarkovMatrix",
    "QuadratureRule",
    "SpectralResult",
    "SweepReport",
    "TriangularFactor",
    "alpha_star",
    "asymptotic_constant",
    "bessel_j",
    "beta_ratio",
    "bounds_report",
    "build_a",
    "build_c_factor",
    "charpoly_coeffs",
    "estimate_c_numeric",
    "evaluate_bound",
    "extremal_from_eigenvector",
    "first_positive_zero",
    "full_spectrum",
    "gauss_laguerre",
    "log_beta_sq",
    "markov_constant",
    "mu_max_power",
    "rayleigh_quotient",
    "run_suite",
    "verify_cor13",
    "verify_integral_lemma",
]
