"""Certificates for overflow/underflow of K_nu(z) in a floating-point system.

Four closed-form certificates bracket the true frontiers:

* overflow_necessary_threshold: orders at or above it make K_nu(z)
  exceed the bound B (derived from the small-argument sandwich lower
  bound plus Karatsuba's gamma inequality, inverted with Lambert W0);
* overflow_sufficient_threshold: orders at or below it keep K_nu(z)
  under B (large-argument sandwich upper bound, same inversion);
* underflow_necessary_z: arguments at or beyond it push K_nu(z) under B
  (elementary Lambert upper estimate W0(x) <= log x applied to
  2z e^{2z} >= x0);
* underflow_sufficient_z: arguments at or below it keep K_nu(z) >= B for
  every nu >= 1/2 (Hoorfar-Hassani lower bound on W0).

Everything is evaluated from log-domain quantities so that a
single-precision system can be analyzed from inside double precision:
the auxiliary arguments (for instance 2^(2 nu - 1) pi / B^2) wildly
overflow the analyzed system.

The dichotomic frontier search locates the exact crossing of log K
against the log range levels between the analytic curves.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .exceptions import DomainError
from .floatsys import FloatSystem
from .kernels import (
    _w0_lower_bound_hh_from_log,
    lambert_w0,
    lambert_w0_from_log,
    log_k_half,
)
from .logk import log_k

_E = math.e
_LOG_PI = math.log(math.pi)
_LOG2 = math.log(2.0)
# minimal order for which the sufficient overflow certificate applies
SUFFICIENT_MIN_ORDER = _E / (2.0 * (4.0 - _E))
_U_SUFFICIENT_MIN_ORDER = _E * _E / (2.0 * (_E - 2.0))


def _w0_of_log(log_arg: float) -> float:
    """W0 of a quantity given by its logarithm, overflow-safe."""
    if log_arg > 690.0:
        return lambert_w0_from_log(log_arg)
    return lambert_w0(math.exp(log_arg))


def overflow_necessary_threshold(B: float, z: float) -> float:
    """Order threshold above which K_nu(z) > B is certified (nu >= 1).

    nu >= 1/2 + A / W0(2A/(z0 e)) with
    A = log B + z0 - (1/2) log(pi/(z0 e)) and z0 = max(z, pi/(B^2 e)).
    """
    logb = _checked_log_bound(B)
    return _overflow_necessary_from_log(logb, z)


def _overflow_necessary_from_log(logb: float, z: float) -> float:
    if not z > 0.0:
        raise DomainError("requires z > 0")
    log_floor = _LOG_PI - 2.0 * logb - 1.0  # log(pi/(B^2 e))
    z0 = max(z, math.exp(log_floor) if log_floor > -700.0 else 0.0)
    a = logb + z0 - 0.5 * (_LOG_PI - math.log(z0) - 1.0)
    w = _w0_of_log(math.log(2.0 * a) - math.log(z0) - 1.0)
    return 0.5 + a / w


def overflow_sufficient_threshold(B: float, z: float) -> float:
    """Order threshold below which K_nu(z) < B is certified.

    nu <= log(x0)/W0((2/(ze)) log x0) - ze/2 with x0 = B/(2 K_{1/2}(z)).
    Valid for orders >= e/(2(4-e)); smaller orders inherit the verdict
    by monotonicity in the order.  Returns -inf when x0 <= 1 (nothing
    certifiable: the bound is below K_{1/2} territory).
    """
    logb = _checked_log_bound(B)
    return _overflow_sufficient_from_log(logb, z)


def _overflow_sufficient_from_log(logb: float, z: float) -> float:
    if not z > 0.0:
        raise DomainError("requires z > 0")
    logx0 = logb - _LOG2 - log_k_half(z)
    if logx0 <= 0.0:
        return -math.inf
    w = _w0_of_log(math.log(2.0 * logx0) - math.log(z) - 1.0)
    return logx0 / w - z * _E / 2.0


_UNDERFLOW_NEC_B_MAX = 2.0 * math.sqrt(math.pi / (2.0 * _E))


def underflow_necessary_z(B: float, nu: float) -> float:
    """Argument threshold beyond which K_nu(z) < B is certified.

    Smallest z satisfying both 2z >= log x0, x0 = 2^(2 nu - 1) pi / B^2
    (so that 2z >= W0(x0), hence B >= 2^(nu-1/2) K_{1/2}(z)), and
    z >= max(2 nu/e, nu/2 + 1/4) (so the sandwich upper bound applies).
    x0 never materializes; only its logarithm does.
    """
    if not (0.0 < B <= _UNDERFLOW_NEC_B_MAX):
        raise DomainError("requires 0 < B <= 2 sqrt(pi/(2e))")
    if not nu > 0.0:
        raise DomainError("requires nu > 0")
    return _underflow_necessary_from_log(math.log(B), nu)


def _underflow_necessary_from_log(logb: float, nu: float) -> float:
    logx0 = (2.0 * nu - 1.0) * _LOG2 + _LOG_PI - 2.0 * logb
    return max(0.5 * logx0, 2.0 * nu / _E, nu / 2.0 + 0.25)


_UNDERFLOW_SUF_B_MAX = math.sqrt(math.pi / _E)


def underflow_sufficient_z(B: float) -> float:
    """Argument threshold below which K_nu(z) >= B for every nu >= 1/2.

    z <= (1/2)(log x0 - log log x0 + (1/2) log log x0 / log x0) with
    x0 = pi/B^2 certifies z <= W0(x0)/2 and therefore
    K_nu(z) >= K_{1/2}(z) >= B.
    """
    if not (0.0 < B <= _UNDERFLOW_SUF_B_MAX):
        raise DomainError("requires 0 < B <= sqrt(pi/e)")
    return _underflow_sufficient_from_log(math.log(B))


def _underflow_sufficient_from_log(logb: float) -> float:
    logx0 = _LOG_PI - 2.0 * logb
    return 0.5 * _w0_lower_bound_hh_from_log(logx0)


def scaled_never_underflows(sys: FloatSystem) -> bool:
    """True iff exponential scaling removes underflow entirely.

    When L <= -(U+1)/2 the scaled function satisfies
    K~_nu(z) > sqrt(pi/(2z + 1/2)) > 2^(-(U+1)/2) >= 2^L for all nu >= 0
    and 0 < z <= B_OFL.
    """
    return sys.min_exponent <= -(sys.max_exponent + 1) / 2.0


def u_lower_bound(z: float) -> float:
    """Certified lower bound on u_nu(z) = log K_nu(z) for every nu >= 0.

    u_nu(z) >= u_0(z) >= -z + (1/2) log(pi/(2z + 1/2)) >= -2z.
    Returns the middle (sharper) expression.
    """
    if not z > 0.0:
        raise DomainError("requires z > 0")
    return -z + 0.5 * math.log(math.pi / (2.0 * z + 0.5))


def u_no_overflow_sufficient(B: float, nu: float, z: float) -> bool:
    """Certificate that the log value itself satisfies u_nu(z) < B.

    Built on K_nu(z) < (nu/z)^nu (valid for nu >= e^2/(2(e-2)), z <= 1;
    larger z inherit the verdict since K falls in z): u < nu log(nu/y)
    with y = min(z, 1), so u < B whenever
    max(nu, e^2/(2(e-2))) <= B / W0(B/y).  Together with u >= -2z this
    keeps u inside [-B, B] without evaluating it; B bounds u directly,
    not K.
    """
    if not z > 0.0:
        raise DomainError("requires z > 0")
    if not B > 0.0:
        raise DomainError("requires B > 0")
    y = min(z, 1.0)
    if B / y <= _E:
        return False
    w = _w0_of_log(math.log(B) - math.log(y))
    return max(nu, _U_SUFFICIENT_MIN_ORDER) <= B / w


class Verdict(enum.Enum):
    CERTIFIED_OVERFLOW = "certified-overflow"
    CERTIFIED_NO_OVERFLOW = "certified-no-overflow"
    CERTIFIED_UNDERFLOW = "certified-underflow"
    CERTIFIED_NO_UNDERFLOW = "certified-no-underflow"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class RegionVerdict:
    """Classification of a point (nu, z) against a system's range."""

    nu: float
    z: float
    verdict: Verdict
    decided_by: str


def classify(sys: FloatSystem, nu: float, z: float,
             exact: bool = False) -> RegionVerdict:
    """Apply the four certificates in order of cost; honest about gaps.

    Points with nu < 1 are outside the certificates' hypotheses and come
    back undecided.  With ``exact=True`` an undecided point escalates to
    a direct comparison of log_k against the log range levels (a
    computation, not a certificate).
    """
    if not z > 0.0:
        raise DomainError("requires z > 0")
    if nu < 1.0:
        if not exact:
            return RegionVerdict(nu, z, Verdict.UNDECIDED, "order-below-1")
    else:
        logb_ofl = sys.log_overflow_level
        logb_ufl = sys.log_underflow_level
        if nu >= _overflow_necessary_from_log(logb_ofl, z):
            return RegionVerdict(nu, z, Verdict.CERTIFIED_OVERFLOW,
                                 "overflow-necessary")
        if nu >= SUFFICIENT_MIN_ORDER and \
                nu <= _overflow_sufficient_from_log(logb_ofl, z):
            return RegionVerdict(nu, z, Verdict.CERTIFIED_NO_OVERFLOW,
                                 "overflow-sufficient")
        if z >= _underflow_necessary_from_log(logb_ufl, nu):
            return RegionVerdict(nu, z, Verdict.CERTIFIED_UNDERFLOW,
                                 "underflow-necessary")
        if z <= _underflow_sufficient_from_log(logb_ufl):
            return RegionVerdict(nu, z, Verdict.CERTIFIED_NO_UNDERFLOW,
                                 "underflow-sufficient")
    if exact:
        u = log_k(nu, z)
        if u > sys.log_overflow_level:
            return RegionVerdict(nu, z, Verdict.CERTIFIED_OVERFLOW,
                                 "direct-logk")
        if u < sys.log_underflow_level:
            return RegionVerdict(nu, z, Verdict.CERTIFIED_UNDERFLOW,
                                 "direct-logk")
        return RegionVerdict(nu, z, Verdict.UNDECIDED, "direct-logk-normal")
    return RegionVerdict(nu, z, Verdict.UNDECIDED, "certificate-gap")


class FrontierKind(enum.Enum):
    OVERFLOW = "overflow"
    UNDERFLOW = "underflow"


@dataclass(frozen=True)
class FrontierCurve:
    """Empirical frontier samples, each an (z, nu) pair on the curve."""

    kind: FrontierKind
    system: FloatSystem
    samples: tuple[tuple[float, float], ...]


_BISECT_TOL = 1e-3
_BISECT_MAXITER = 60


def _bisect(f, lo: float, hi: float, what: str) -> float:
    flo, fhi = f(lo), f(hi)
    if not (flo < 0.0 <= fhi or fhi < 0.0 <= flo):
        raise DomainError(
            f"frontier bracket failure for {what}: f({lo})={flo}, f({hi})={fhi}")
    rising = flo < 0.0
    for _ in range(_BISECT_MAXITER):
        if hi - lo <= _BISECT_TOL:
            break
        mid = 0.5 * (lo + hi)
        if (f(mid) < 0.0) == rising:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def frontier_search(sys: FloatSystem, kind: FrontierKind,
                    grid: list[float]) -> FrontierCurve:
    """Dichotomic search for the exact floating-point frontier.

    Overflow: the grid holds arguments z; for each one the order nu* with
    log K_{nu*}(z) = log B_OFL is bisected inside the analytic bracket.
    Underflow: the grid holds orders nu; for each one the argument z* with
    log K_nu(z*) = log B_UFL is bisected between the sufficient threshold
    (no underflow at or below it) and the necessary threshold.
    """
    if not grid:
        raise DomainError("frontier_search requires a non-empty grid")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("frontier_search grid must be strictly increasing")
    samples = []
    if kind is FrontierKind.OVERFLOW:
        logb = sys.log_overflow_level
        for z in grid:
            lo = max(1.0, _overflow_sufficient_from_log(logb, z))
            hi = _overflow_necessary_from_log(logb, z)
            nu_star = _bisect(lambda v: log_k(v, z) - logb, lo, hi,
                              f"overflow z={z}")
            samples.append((z, nu_star))
    else:
        logb = sys.log_underflow_level
        z_lo = _underflow_sufficient_from_log(logb)
        for nu in grid:
            z_hi = _underflow_necessary_from_log(logb, nu)
            z_star = _bisect(lambda v: logb - log_k(nu, v), z_lo, z_hi,
                             f"underflow nu={nu}")
            samples.append((z_star, nu))
    return FrontierCurve(kind=kind, system=sys, samples=tuple(samples))


def _checked_log_bound(B: float) -> float:
    if not B > 0.0 or math.isinf(B) or math.isnan(B):
        raise DomainError("bound B must be a positive finite real")
    return math.log(B)
