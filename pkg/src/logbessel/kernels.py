"""Scalar kernels shared by the range certificates and the experiment.

Lambert W0 (with certified elementary bounds that double as initial
guesses and as test oracles), Karatsuba's two-sided gamma bounds, an
internal log-gamma, and the coefficient set entering the two-sided
sandwich bounds on K_nu.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import ConvergenceError, DomainError

_E = math.e
_INV_E = 1.0 / math.e
_HALF_LOG_2PI = 0.9189385332046727417803297364
_HALF_LOG_PI = 0.5723649429247000870717136756


# ---------------------------------------------------------------------------
# Lambert W0
# ---------------------------------------------------------------------------

def w0_upper_bound_hh(x: float) -> float:
    """Hoorfar-Hassani upper bound on W0(x) for x >= e.

    log x - log log x + (e/(e-1)) log log x / log x, with equality at x = e.
    """
    if x < _E:
        raise DomainError("w0_upper_bound_hh requires x >= e")
    return _w0_upper_bound_hh_from_log(math.log(x))


def w0_lower_bound_hh(x: float) -> float:
    """Hoorfar-Hassani lower bound on W0(x) for x >= e.

    log x - log log x + (1/2) log log x / log x, with equality at x = e.
    """
    if x < _E:
        raise DomainError("w0_lower_bound_hh requires x >= e")
    return _w0_lower_bound_hh_from_log(math.log(x))


def _w0_upper_bound_hh_from_log(logx: float) -> float:
    llx = math.log(logx)
    return logx - llx + (_E / (_E - 1.0)) * (llx / logx)


def _w0_lower_bound_hh_from_log(logx: float) -> float:
    llx = math.log(logx)
    return logx - llx + 0.5 * (llx / logx)


def lambert_w0(x: float) -> float:
    """Principal branch of the Lambert W function for real x >= -1/e.

    Halley iteration; for x >= e the iteration is seeded from the
    Hoorfar-Hassani upper bound, near the branch point from the
    square-root expansion, and from cheap elementary guesses between.
    """
    if math.isnan(x) or x < -_INV_E:
        raise DomainError("lambert_w0 requires x >= -1/e")
    if x == 0.0:
        return 0.0
    if x == -_INV_E:
        return -1.0
    if x >= _E:
        w = _w0_upper_bound_hh_from_log(math.log(x))
    elif x >= 0.3:
        w = math.log1p(x)
    elif x > -0.25:
        w = x * (1.0 - x)
    else:
        p = math.sqrt(2.0 * (1.0 + _E * x))
        w = -1.0 + p - p * p / 3.0 + 11.0 * p ** 3 / 72.0
        if p < 1e-4:
            return w  # expansion already at working precision
    return _halley_w0(w, x)


def _halley_w0(w: float, x: float) -> float:
    polish = 0
    for it in range(80):
        ew = math.exp(w)
        f = w * ew - x
        w1 = w + 1.0
        dw = f / (ew * w1 - (w + 2.0) * f / (2.0 * w1))
        w -= dw
        if w < -1.0:
            w = -1.0 + 1e-10
        if abs(dw) <= 2e-16 * (1.0 + abs(w)):
            polish += 1
            if polish >= 2:  # one extra step after first hit
                return w
    raise ConvergenceError("lambert_w0 did not converge", it + 1)


def lambert_w0_from_log(logx: float) -> float:
    """W0(exp(logx)) without forming exp(logx).

    Intended for the range certificates whose arguments overflow the
    analyzed system (and possibly the working one).  Solves
    w + log w = logx by Newton for logx >= 1; below that the direct
    evaluation is safe and is used instead.
    """
    if logx < 1.0:
        return lambert_w0(math.exp(logx))
    w = _w0_upper_bound_hh_from_log(logx)
    for it in range(80):
        dw = (w + math.log(w) - logx) * w / (w + 1.0)
        w -= dw
        if abs(dw) <= 2e-16 * (1.0 + abs(w)):
            return w
    raise ConvergenceError("lambert_w0_from_log did not converge", it + 1)


# ---------------------------------------------------------------------------
# log Gamma and Karatsuba's bounds
# ---------------------------------------------------------------------------

# Taylor coefficients of log Gamma(2+t) beyond the linear (1-gamma) t term;
# entry k-2 multiplies t^k and equals (-1)^k (zeta(k)-1)/k.
_LGAMMA2_TAYLOR = (
    0.32246703342411321824,
    -0.067352301053198095133,
    0.020580808427784547879,
    -0.0073855510286739852663,
    0.0028905103307415232858,
    -0.0011927539117032609771,
    0.00050966952474304242234,
    -0.00022315475845357937976,
    0.000099457512781808533715,
    -0.000044926236738133141700,
    0.000020507212775670691553,
    -9.4394882752683959040e-6,
    4.3748667899074878042e-6,
    -2.0392157538013666132e-6,
    9.5514121304074198329e-7,
    -4.4924691987645660433e-7,
    2.1207184805554665869e-7,
    -1.0043224823968099609e-7,
    4.7698101693639805658e-8,
    -2.2711094608943164910e-8,
    1.0838659214896954091e-8,
    -5.1834750419700466551e-9,
    2.4836745438024783172e-9,
    -1.1921401405860912074e-9,
    5.7313672416788612175e-10,
    -2.7595228851242331452e-10,
    1.3304764374244489481e-10,
    -6.4229645638381000222e-11,
    3.1044247747322272762e-11,
    -1.5021384080754142171e-11,
    7.2759744802390796625e-12,
    -3.5277424765759150836e-12,
    1.7119917905596179086e-12,
)
_ONE_MINUS_GAMMA = 1.0 - 0.57721566490153286061

# Stirling tail coefficients B_{2n}/(2n (2n-1)) for n = 1..8.
_STIRLING = (
    1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
)


def _log_gamma_near2(t: float) -> float:
    # log Gamma(2+t) for t in [-0.5, 0.5]
    acc = 0.0
    for c in reversed(_LGAMMA2_TAYLOR):
        acc = (acc + c) * t
    return (_ONE_MINUS_GAMMA + acc) * t


def log_gamma(x: float) -> float:
    """log Gamma(x) for x > 0.

    Taylor series around the zero at x = 2, argument shifts into its
    range, and the Stirling series with Bernoulli tail for x >= 13.
    Exact at x = 1 and x = 2; a few ulps elsewhere.
    """
    if math.isnan(x) or x <= 0.0:
        raise DomainError("log_gamma requires x > 0")
    if x < 1.5:
        if x < 0.5:
            return _log_gamma_near2(x) - math.log(x) - math.log1p(x)
        return _log_gamma_near2(x - 1.0) - math.log(x)
    if x < 2.5:
        return _log_gamma_near2(x - 2.0)
    if x < 13.0:
        prod = 1.0
        y = x
        while y >= 2.5:
            y -= 1.0
            prod *= y
        return math.log(prod) + _log_gamma_near2(y - 2.0)
    inv = 1.0 / x
    inv2 = inv * inv
    acc = 0.0
    for c in reversed(_STIRLING):
        acc = acc * inv2 + c
    return (x - 0.5) * math.log(x) - x + _HALF_LOG_2PI + acc * inv


def karatsuba_gamma_log_bounds(x: float) -> tuple[float, float]:
    """(log lo, log hi) with lo < Gamma(1+x) < hi for x > 0.

    sqrt(pi) (x/e)^x (8x^3 + 4x^2 + x + c)^(1/6) with c = 1/100 for the
    lower and c = 1/30 for the upper bound; assembled in log space so the
    bracket stays usable where Gamma itself overflows.
    """
    if x <= 0.0:
        raise DomainError("karatsuba_gamma_log_bounds requires x > 0")
    base = _HALF_LOG_PI + x * (math.log(x) - 1.0)
    if x > 1e15:
        # 8x^3 would overflow long before Gamma does
        lead = math.log(8.0) + 3.0 * math.log(x)
        corr = 0.5 / x  # (4x^2 + x + c)/(8x^3) to leading order
        poly_lo = lead + math.log1p(corr)
        poly_hi = poly_lo
    else:
        poly = 8.0 * x ** 3 + 4.0 * x * x + x
        poly_lo = math.log(poly + 0.01)
        poly_hi = math.log(poly + 1.0 / 30.0)
    return base + poly_lo / 6.0, base + poly_hi / 6.0


def karatsuba_gamma_bounds(x: float) -> tuple[float, float]:
    """Linear-space version of :func:`karatsuba_gamma_log_bounds`."""
    lo, hi = karatsuba_gamma_log_bounds(x)
    return math.exp(lo), math.exp(hi)


# ---------------------------------------------------------------------------
# Sandwich-bound coefficients
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class YangChuCoefficients:
    """Coefficients of the two-sided elementary bounds on K_nu, nu >= 1.

    The first family sandwiches sqrt(2/pi) z^nu e^z K_nu(z) between
    (z+a1)^(nu-1/2) and (z+b1)^(nu-1/2); the second family sandwiches
    (2/Gamma(nu)) (z/2)^nu e^z K_nu(z) between (1+a2 z)^(nu-1/2) and
    (1+b2 z)^(nu-1/2).
    """

    nu: float
    c0: float
    a1: float
    b1: float
    a2: float
    b2: float


def yang_chu_coefficients(nu: float) -> YangChuCoefficients:
    """Coefficient set (c0, a1, b1, a2, b2) for order nu >= 1."""
    if not nu >= 1.0:
        raise DomainError("yang_chu_coefficients requires nu >= 1")
    # c0 = 2 (Gamma(nu)/sqrt(pi))^(2/(2 nu - 1)), evaluated in log space
    # since Gamma(nu) overflows long before c0 does.
    c0 = 2.0 * math.exp((log_gamma(nu) - _HALF_LOG_PI) * (2.0 / (2.0 * nu - 1.0)))
    m1 = nu / 2.0 + 0.25
    m2 = nu - 0.5
    return YangChuCoefficients(
        nu=nu,
        c0=c0,
        a1=min(c0, m1),
        b1=max(c0, m1),
        a2=1.0 / max(c0, m2),
        b2=1.0 / min(c0, m2),
    )


def c0_bracket(nu: float) -> tuple[float, float]:
    """Certified bracket (2 nu/e)(2/e)^(1/(2 nu-1)) < c0 < 2 nu/e, nu >= 1."""
    if not nu >= 1.0:
        raise DomainError("c0_bracket requires nu >= 1")
    hi = 2.0 * nu / _E
    lo = hi * math.exp(math.log(2.0 / _E) / (2.0 * nu - 1.0))
    return lo, hi


def log_k_half(z: float) -> float:
    """log K_{1/2}(z) = -z + (1/2) log(pi/(2z)), exact closed form."""
    if z <= 0.0:
        raise DomainError("log_k_half requires z > 0")
    return -z + 0.5 * (math.log(math.pi) - math.log(2.0 * z))
