"""Log-domain modified Bessel functions of the second kind.

Evaluates u_nu(z) = log K_nu(z) by a stable forward recursion on the
order, certifies where K_nu(z) overflows or underflows a given binary
floating-point system from closed-form bounds, and validates the whole
stack through the Student-t characteristic function and its Gil-Pelaez
inversion.
"""

from .exceptions import ConvergenceError, DomainError
from .floatsys import DOUBLE, SINGLE, FloatSystem, derived_levels, \
    parse_float_system
from .kernels import (
    YangChuCoefficients,
    c0_bracket,
    karatsuba_gamma_bounds,
    karatsuba_gamma_log_bounds,
    lambert_w0,
    lambert_w0_from_log,
    log_gamma,
    log_k_half,
    w0_lower_bound_hh,
    w0_upper_bound_hh,
    yang_chu_coefficients,
)
from .logk import (
    LogBesselValue,
    i_ratio_cf,
    log_i,
    log_k,
    log_k_pair,
    log_k_scaled,
    log_k_sum_of_ratios,
    log_recurrence_climb,
    select_nu0,
)
from .regions import (
    FrontierCurve,
    FrontierKind,
    RegionVerdict,
    Verdict,
    classify,
    frontier_search,
    overflow_necessary_threshold,
    overflow_sufficient_threshold,
    scaled_never_underflows,
    u_lower_bound,
    u_no_overflow_sufficient,
    underflow_necessary_z,
    underflow_sufficient_z,
)
from .seeds import ScaledSeedPair, log_scaled_pair, ratio_cf, scaled_seed
from .studentcf import (
    CFMethod,
    CharacteristicEvaluator,
    ErrorRow,
    QuadratureResult,
    error_report,
    gauss_kronrod_integrate,
    gil_pelaez_cdf,
    gil_pelaez_pdf,
    integrate_finite,
    psi,
    student_cf,
    student_pdf_closed,
)

__version__ = "0.1.0"

__all__ = [
    "CFMethod",
    "CharacteristicEvaluator",
    "ConvergenceError",
    "DOUBLE",
    "DomainError",
    "ErrorRow",
    "FloatSystem",
    "FrontierCurve",
    "FrontierKind",
    "LogBesselValue",
    "QuadratureResult",
    "RegionVerdict",
    "ScaledSeedPair",
    "SINGLE",
    "Verdict",
    "YangChuCoefficients",
    "c0_bracket",
    "classify",
    "derived_levels",
    "error_report",
    "frontier_search",
    "gauss_kronrod_integrate",
    "gil_pelaez_cdf",
    "gil_pelaez_pdf",
    "i_ratio_cf",
    "integrate_finite",
    "karatsuba_gamma_bounds",
    "karatsuba_gamma_log_bounds",
    "lambert_w0",
    "lambert_w0_from_log",
    "log_gamma",
    "log_i",
    "log_k",
    "log_k_half",
    "log_k_pair",
    "log_k_scaled",
    "log_k_sum_of_ratios",
    "log_recurrence_climb",
    "log_scaled_pair",
    "overflow_necessary_threshold",
    "overflow_sufficient_threshold",
    "parse_float_system",
    "psi",
    "ratio_cf",
    "scaled_never_underflows",
    "scaled_seed",
    "select_nu0",
    "student_cf",
    "student_pdf_closed",
    "u_lower_bound",
    "u_no_overflow_sufficient",
    "underflow_necessary_z",
    "underflow_sufficient_z",
    "w0_lower_bound_hh",
    "w0_upper_bound_hh",
]
