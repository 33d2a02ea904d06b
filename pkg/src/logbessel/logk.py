"""log K_nu(z) by stable forward recursion on the order lattice.

The three-term recurrence K_{nu+1} = K_{nu-1} + (2 nu/z) K_nu maps
directly onto logarithms:

    u_{nu+1} = u_{nu-1} + log1p((2 nu/z) exp(u_nu - u_{nu-1})),
    u_nu := log K_nu(z).

Forward stepping is stable here because K grows with the order and the
step function is non-expansive (condition number <= 1) once the values
are positive.  While u <= 0 the climb instead runs on exponentially
scaled values in linear space, which never underflow; the log form
takes over from the first lattice order nu0 with u_{nu0} > 0.

Negative orders use the even symmetry K_nu = K_{-nu}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import ConvergenceError, DomainError
from .seeds import _CF_MAXITER, _CF_TINY, log_scaled_pair

# Linear-phase guards: switch to log stepping before the scaled values can
# reach the top of the double range.
_LINEAR_LOG_CAP = 667.0          # exp() of this stays clear of overflow
_LINEAR_VALUE_CAP = 1e290
# Threshold on log((2 nu/z) e^(u - u')) above which the log1p form is
# rearranged around the dominant term.
_EXP_ARG_CAP = 690.0


@dataclass(frozen=True)
class LogBesselValue:
    """A consecutive pair (u_nu, u_{nu+1}) = (log K_nu, log K_{nu+1})."""

    nu: float
    z: float
    u: float
    u_next: float


def _lattice(nu: float) -> tuple[float, int]:
    """Base order in [0, 1) (or nu itself when nu <= 1) and step count."""
    if nu <= 1.0:
        return nu, 0
    k = math.floor(nu)
    return nu - k, int(k)


def _log_step(u0: float, u1: float, order: float, z: float) -> float:
    """One forward step of the log recurrence at the given middle order."""
    lg = math.log(2.0 * order / z) if order < 1e300 * z else \
        math.log(2.0 * order) - math.log(z)
    du = u1 - u0
    if lg + du < _EXP_ARG_CAP:
        return u0 + math.log1p((2.0 * order / z) * math.exp(du)
                               if du < _EXP_ARG_CAP
                               else math.exp(lg + du))
    # growth term dominates by hundreds of e-folds
    return u1 + lg + math.log1p(math.exp(-(lg + du)))


def log_recurrence_climb(u_prev: float, u_cur: float, order_start: float,
                         z: float, n_steps: int) -> tuple[float, float]:
    """Iterate the log recurrence n_steps times from an arbitrary pair.

    The pair (u_prev, u_cur) sits at orders (order_start - 1, order_start);
    the returned pair sits n_steps higher.  Exposed for stability
    experiments on the raw recurrence.
    """
    for j in range(n_steps):
        u_prev, u_cur = u_cur, _log_step(u_prev, u_cur, order_start + j, z)
    return u_prev, u_cur


def _climb(nu: float, z: float,
           stop_at_nu0: bool = False) -> tuple[float, float, float | None]:
    """Drive the lattice climb; returns (u_nu, u_{nu+1}, nu0).

    nu0 is the first lattice order whose u is positive (the order the
    log recursion effectively starts from), or None when the whole climb
    stayed in the non-positive, linear-space regime (direct path).
    With ``stop_at_nu0`` the climb returns as soon as nu0 is known (the
    u values then belong to the pair at hand, not to nu).
    """
    base, m = _lattice(nu)
    lk0, lk1 = log_scaled_pair(base, z)
    u0, u1 = lk0 - z, lk1 - z
    nu0 = base if u0 > 0.0 else None
    if stop_at_nu0 and nu0 is not None:
        return u0, u1, nu0
    linear = nu0 is None and lk1 <= _LINEAR_LOG_CAP
    if linear:
        kt0, kt1 = math.exp(lk0), math.exp(lk1)
        ez = math.exp(z) if z <= _LINEAR_LOG_CAP else math.inf
    for j in range(1, m + 1):
        order = base + j  # middle order of this step
        if linear:
            if kt0 > ez or kt1 > _LINEAR_VALUE_CAP:
                u0, u1 = math.log(kt0) - z, math.log(kt1) - z
                linear = False
                if u0 > 0.0:
                    nu0 = order - 1.0
            else:
                kt0, kt1 = kt1, kt0 + (2.0 * order / z) * kt1
                continue
        if nu0 is None and u0 > 0.0:
            nu0 = order - 1.0
        if stop_at_nu0 and nu0 is not None:
            return u0, u1, nu0
        u0, u1 = u1, _log_step(u0, u1, order, z)
    if linear:
        u0, u1 = math.log(kt0) - z, math.log(kt1) - z
    return u0, u1, nu0


def _check_args(nu: float, z: float) -> float:
    if math.isnan(nu) or math.isnan(z) or not z > 0.0 or math.isinf(z):
        raise DomainError("requires finite z > 0")
    if math.isinf(nu):
        raise DomainError("requires finite nu")
    return abs(nu)


def log_k_pair(nu: float, z: float) -> LogBesselValue:
    """Consecutive pair of log K values at orders (|nu|, |nu|+1)."""
    nu = _check_args(nu, z)
    u0, u1, _ = _climb(nu, z)
    return LogBesselValue(nu=nu, z=z, u=u0, u_next=u1)


def log_k(nu: float, z: float) -> float:
    """log K_nu(z) for real nu (even in nu) and z > 0."""
    nu = _check_args(nu, z)
    return _climb(nu, z)[0]


def log_k_scaled(nu: float, z: float) -> float:
    """log K~_nu(z) = log(e^z K_nu(z)) = log_k(nu, z) + z.

    The sum happens on the log-domain value, so the scaled function is
    available even where e^z alone would overflow.
    """
    nu = _check_args(nu, z)
    return _climb(nu, z)[0] + z


def select_nu0(nu: float, z: float) -> float | None:
    """Starting order of the log recursion, or None for the direct path.

    Returns the smallest order nu0 with nu - nu0 a natural number and
    u_{nu0} > 0.  When u stays non-positive all the way to nu the log
    recursion is never needed and None is returned.  A no-overflow
    certificate at bound 1 short-circuits the search where it applies.
    """
    nu = _check_args(nu, z)
    # certificate that K_j(z) < 1 for every order j <= threshold
    from .regions import overflow_sufficient_threshold  # deferred: cycle
    try:
        threshold = overflow_sufficient_threshold(1.0, z)
    except DomainError:
        threshold = -math.inf
    if threshold >= _SUFFICIENT_MIN_ORDER and nu <= threshold:
        return None
    return _climb(nu, z, stop_at_nu0=True)[2]


_SUFFICIENT_MIN_ORDER = math.e / (2.0 * (4.0 - math.e))


def log_k_sum_of_ratios(nu: float, z: float) -> float:
    """log K_nu(z) as log K_base + sum of log ratios.

    The ratios follow the forward recursion r_nu = 1/r_{nu-1} + 2 nu/z
    from the seed ratio.  Mathematically identical to :func:`log_k` and
    equivalent in error propagation; kept as an independent
    implementation for cross-validation.
    """
    nu = _check_args(nu, z)
    base, m = _lattice(nu)
    lk0, lk1 = log_scaled_pair(base, z)
    if m == 0:
        return lk0 - z
    r = math.exp(lk1 - lk0)
    total = math.log(r)
    for j in range(1, m):
        r = 1.0 / r + 2.0 * (base + j) / z
        total += math.log(r)
    return (lk0 - z) + total


def i_ratio_cf(nu: float, z: float) -> float:
    """I_{nu+1}(z)/I_nu(z) = 1/(2(nu+1)/z + 1/(2(nu+2)/z + ...)).

    Modified Lentz evaluation of the standard continued fraction; the
    number of terms grows roughly with z.
    """
    if nu < 0.0:
        raise DomainError("i_ratio_cf requires nu >= 0")
    if not z > 0.0:
        raise DomainError("i_ratio_cf requires z > 0")
    f = _CF_TINY
    c = f
    d = 0.0
    hits = 0
    for n in range(1, _CF_MAXITER + 1):
        bn = 2.0 * (nu + n) / z
        d = bn + d
        if d == 0.0:
            d = _CF_TINY
        c = bn + 1.0 / c
        if c == 0.0:
            c = _CF_TINY
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            hits += 1
            if hits >= 2:
                return f
        else:
            hits = 0
    raise ConvergenceError("I-ratio continued fraction did not converge",
                           _CF_MAXITER)


def log_i(nu: float, z: float) -> float:
    """log I_nu(z) through the Wronskian of the two modified solutions.

    z (I_nu K_{nu+1} + I_{nu+1} K_nu) = 1 rearranges to
    log I_nu = -log z - log K_nu - log(I_{nu+1}/I_nu + K_{nu+1}/K_nu),
    with the K-ratio read off the recursion pair and the I-ratio from
    its continued fraction.
    """
    if nu < 0.0:
        raise DomainError("log_i requires nu >= 0")
    pair = log_k_pair(nu, z)
    t = i_ratio_cf(nu, z)
    r = math.exp(pair.u_next - pair.u)
    return -math.log(z) - pair.u - math.log(t + r)
