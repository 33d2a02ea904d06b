"""Seed evaluation of the exponentially scaled K-Bessel pair.

Provides K~_nu(z) = e^z K_nu(z) for base orders nu0 in [0, 1] together
with K~_{nu0+1}(z): the pair every order-recursion in this library
starts from.  Two paths share the work:

* a small-argument series (z <= 2) built on reciprocal-gamma Taylor
  data, accurate to machine precision for |mu| <= 1/2;
* a Steed-style continued fraction with exponential scaling (z > 2).

Base orders in (1/2, 1] are reached from the adjacent |mu| <= 1/2 pair
by one application of the three-term recurrence.  All internal results
are carried as logarithms so that tiny z (where K_{nu0+1} overflows
linear double) stays representable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exceptions import ConvergenceError, DomainError

Z_SWITCH = 2.0          # series below, continued fraction above
_Z_ASYMPTOTIC = 1e6     # large-argument expansion above (the continued
                        # fraction's q-refinement stalls in rounding noise
                        # once the partial numerators fall below b^2 eps)
_CF_TINY = 1e-30        # modified-Lentz small-value substitution
_CF_MAXITER = 10_000

# Taylor coefficients of 1/Gamma(1+x) around 0 (entry j multiplies x^j).
_RGAMMA_TAYLOR = (
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.16653861138229148950,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.7822634399050712540e-12,
    -3.6968056186422057082e-12,
    5.1003702874544759790e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
)


def _gamma_aux(mu: float) -> tuple[float, float, float, float]:
    """(1/Gamma(1+mu), 1/Gamma(1-mu), g1, g2) for |mu| <= 1/2.

    g1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu) and
    g2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2, both evaluated through the
    even/odd split of the Taylor series so g1 keeps full precision as
    mu -> 0.
    """
    mu2 = mu * mu
    godd = 0.0
    geven = 0.0
    for j in range(len(_RGAMMA_TAYLOR) - 1, -1, -1):
        if j % 2:
            godd = godd * mu2 + _RGAMMA_TAYLOR[j]
        else:
            geven = geven * mu2 + _RGAMMA_TAYLOR[j]
    return geven + mu * godd, geven - mu * godd, -godd, geven


def _series_pair_log(mu: float, z: float) -> tuple[float, float]:
    """(log K~_mu(z), log K~_{mu+1}(z)) by the small-argument series.

    Requires |mu| <= 1/2 and 0 < z <= Z_SWITCH.  The two partial sums
    are of moderate magnitude for every positive double z; only the
    assembled K_{mu+1} = (2/z) * sum1 can overflow, which the log-space
    return sidesteps.
    """
    gampl, gammi, g1, g2 = _gamma_aux(mu)
    d = -math.log(0.5 * z)
    e = mu * d
    fact = 1.0 if mu == 0.0 else math.pi * mu / math.sin(math.pi * mu)
    fact2 = 1.0 if e == 0.0 else math.sinh(e) / e
    ff = fact * (g1 * math.cosh(e) + g2 * fact2 * d)
    sum0 = ff
    ee = math.exp(e)
    p = 0.5 * ee / gampl
    q = 0.5 / (ee * gammi)
    c = 1.0
    z2 = 0.25 * z * z
    sum1 = p
    for i in range(1, 1000):
        ff = (i * ff + p + q) / (i * i - mu * mu)
        c *= z2 / i
        p /= (i - mu)
        q /= (i + mu)
        delta = c * ff
        sum0 += delta
        sum1 += c * (p - i * ff)
        if abs(delta) < abs(sum0) * 1e-18:
            break
    else:
        raise ConvergenceError("seed series did not converge", 1000)
    return math.log(sum0) + z, math.log(2.0 / z) + math.log(sum1) + z


def _cf_pair_log(mu: float, z: float) -> tuple[float, float]:
    """(log K~_mu(z), log K~_{mu+1}(z)) by the scaled continued fraction.

    Steed's algorithm; requires |mu| <= 1/2 and z >= Z_SWITCH.
    """
    b = 2.0 * (1.0 + z)
    d = 1.0 / b
    h = d
    delh = d
    q1, q2 = 0.0, 1.0
    a1 = 0.25 - mu * mu
    q = a1
    c = a1
    a = -a1
    s = 1.0 + q * delh
    for i in range(2, _CF_MAXITER + 1):
        a -= 2 * (i - 1)
        c = -a * c / i
        qnew = (q1 - b * q2) / a
        q1, q2 = q2, qnew
        q += c * qnew
        b += 2.0
        d = 1.0 / (b + a * d)
        delh = (b * d - 1.0) * delh
        h += delh
        dels = q * delh
        s += dels
        if abs(dels / s) < 1e-17:
            break
    else:
        raise ConvergenceError("seed continued fraction did not converge",
                               _CF_MAXITER)
    h = a1 * h
    lk0 = 0.5 * math.log(math.pi / (2.0 * z)) - math.log(s)
    ratio = (mu + z + 0.5 - h) / z
    return lk0, lk0 + math.log(ratio)


def _asymptotic_log(mu: float, z: float) -> float:
    """log K~_mu(z) from the large-argument expansion, z >= _Z_ASYMPTOTIC.

    sqrt(pi/(2z)) sum_k prod_j (4 mu^2 - (2j-1)^2) / (k! (8z)^k); three or
    four terms reach machine precision at this size of z.
    """
    term = 1.0
    total = 1.0
    for k in range(1, 12):
        term *= (4.0 * mu * mu - (2 * k - 1) ** 2) / (k * 8.0 * z)
        total += term
        if abs(term) < 1e-18:
            break
    return 0.5 * (math.log(math.pi) - math.log(2.0) - math.log(z)) \
        + math.log(total)


def log_scaled_pair(nu0: float, z: float) -> tuple[float, float]:
    """(log K~_nu0(z), log K~_{nu0+1}(z)) for nu0 in [0, 1], z > 0."""
    if not 0.0 <= nu0 <= 1.0:
        raise DomainError("seed order must lie in [0, 1]")
    if not z > 0.0 or math.isinf(z):
        raise DomainError("seed argument must be a positive finite real")
    mu = nu0 - 1.0 if nu0 > 0.5 else nu0
    if z <= Z_SWITCH:
        lk0, lk1 = _series_pair_log(mu, z)
    elif z <= _Z_ASYMPTOTIC:
        lk0, lk1 = _cf_pair_log(mu, z)
    else:
        lk0, lk1 = _asymptotic_log(mu, z), _asymptotic_log(mu + 1.0, z)
    if nu0 > 0.5:
        # advance one order: K_{nu0+1} = K_{nu0-1} + (2 nu0/z) K_{nu0},
        # combined in log space since the terms may dwarf each other
        b = math.log(2.0 * nu0 / z) + lk1
        hi, lo = (lk0, b) if lk0 > b else (b, lk0)
        lk0, lk1 = lk1, hi + math.log1p(math.exp(lo - hi))
    return lk0, lk1


@dataclass(frozen=True)
class ScaledSeedPair:
    """The pair (K~_nu0(z), K~_{nu0+1}(z)) of exponentially scaled values."""

    nu0: float
    z: float
    kt0: float
    kt1: float

    @property
    def log_kt0(self) -> float:
        return math.log(self.kt0)

    @property
    def log_kt1(self) -> float:
        return math.log(self.kt1)


def scaled_seed(nu0: float, z: float) -> ScaledSeedPair:
    """Seed pair of exponentially scaled values for nu0 in [0, 1].

    Both values carry a relative error of at most ~1e-13.  For
    extremely small z combined with nu0 near 1 the second member can
    exceed the double range; use :func:`log_scaled_pair` in that regime.
    """
    lk0, lk1 = log_scaled_pair(nu0, z)
    return ScaledSeedPair(nu0=nu0, z=z, kt0=math.exp(lk0), kt1=math.exp(lk1))


def ratio_cf(nu: float, z: float) -> float:
    """K_{nu+1}(z)/K_nu(z) by its continued fraction.

    r_nu(z) = (nu + 1/2 + z + (nu^2 - 1/4) / (b_1 + a_2/(b_2 + ...))) / z
    with a_n = nu^2 - (n - 1/2)^2 and b_n = 2(n + z), evaluated by the
    modified Lentz scheme.  Relative error is around 1e-14 for z >= 0.1
    and degrades slowly below (several 1e-13 near z = 0.01, where
    thousands of terms are needed).
    """
    if nu < 0.0:
        raise DomainError("ratio_cf requires nu >= 0")
    if not z > 0.0:
        raise DomainError("ratio_cf requires z > 0")
    f = nu + 0.5 + z
    c = f
    d = 0.0
    hits = 0
    for n in range(1, _CF_MAXITER + 1):
        an = nu * nu - (n - 0.5) ** 2
        bn = 2.0 * (n + z)
        d = bn + an * d
        if d == 0.0:
            d = _CF_TINY
        c = bn + an / c
        if c == 0.0:
            c = _CF_TINY
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            hits += 1
            if hits >= 2:  # guard against plateaux of the partial convergents
                return f / z
        else:
            hits = 0
    raise ConvergenceError("K-ratio continued fraction did not converge",
                           _CF_MAXITER)
