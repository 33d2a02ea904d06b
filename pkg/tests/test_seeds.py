import math

import mpmath as mp
import pytest

from logbessel import ConvergenceError, DomainError, log_scaled_pair, \
    ratio_cf, scaled_seed

SQRT_PI_OVER_2 = 1.25331413731550025


def segura_bracket(nu, z):
    lo = (nu + math.sqrt(nu * nu + z * z)) / z
    hi = (nu + 0.5 + math.sqrt((nu + 0.5) ** 2 + z * z)) / z
    return lo, hi


def test_half_order_closed_form():
    # K~_{1/2}(z) = sqrt(pi/(2z)) exactly
    assert scaled_seed(0.5, 1.0).kt0 == pytest.approx(SQRT_PI_OVER_2, rel=1e-14)
    assert scaled_seed(0.5, 100.0).kt0 == pytest.approx(
        SQRT_PI_OVER_2 / 10.0, rel=1e-14)
    # K~_{3/2}(z) = K~_{1/2}(z) (1 + 1/z)
    pair = scaled_seed(0.5, 2.0)
    assert pair.kt1 / pair.kt0 == pytest.approx(1.5, rel=1e-13)


def test_small_argument_zero_order():
    # K~_0(z) -> -log(z/2) - euler_gamma as z -> 0 (frozen oracle value)
    assert scaled_seed(0.0, 1e-6).kt0 == pytest.approx(13.9314560050754588,
                                                       rel=1e-13)


def test_seed_accuracy_against_mpmath_across_paths():
    """Both seed paths (series and continued fraction) to 1e-13 relative."""
    with mp.workdps(40):
        for nu0 in (0.0, 0.1, 0.25, 0.5, 0.51, 0.75, 0.9, 1.0):
            for z in (1e-8, 1e-3, 0.5, 1.0, 1.9, 2.0, 2.1, 3.0, 10.0,
                      100.0, 700.0):
                lk0, lk1 = log_scaled_pair(nu0, z)
                ref0 = float(mp.log(mp.besselk(nu0, mp.mpf(z))) + z)
                ref1 = float(mp.log(mp.besselk(nu0 + 1, mp.mpf(z))) + z)
                assert lk0 == pytest.approx(ref0, abs=2e-13 * max(1, abs(ref0)))
                assert lk1 == pytest.approx(ref1, abs=2e-13 * max(1, abs(ref1)))


def test_series_and_cf_agree_at_crossover():
    # both evaluation paths overlap well inside [1, 4]
    from logbessel.seeds import _cf_pair_log, _series_pair_log
    for mu in (-0.5, -0.2, 0.0, 0.3, 0.5):
        for z in (2.0, 2.00000001):
            s0, s1 = _series_pair_log(mu, z)
            c0, c1 = _cf_pair_log(mu, z)
            assert s0 == pytest.approx(c0, abs=5e-14 * max(1, abs(s0)))
            assert s1 == pytest.approx(c1, abs=5e-14 * max(1, abs(s1)))


def test_seed_pair_invariants():
    for nu0 in (0.0, 0.3, 0.5, 0.8, 1.0):
        for z in (0.01, 0.5, 2.5, 40.0, 400.0):
            pair = scaled_seed(nu0, z)
            assert pair.kt0 > 0.0 and pair.kt1 > 0.0
            assert pair.kt1 / pair.kt0 >= 1.0
            # scaled values never fall below the closed-form floor
            assert pair.kt0 > math.sqrt(math.pi / (2.0 * z + 0.5))


def test_seed_domain_errors():
    with pytest.raises(DomainError):
        scaled_seed(-0.1, 1.0)
    with pytest.raises(DomainError):
        scaled_seed(1.1, 1.0)
    with pytest.raises(DomainError):
        scaled_seed(0.5, 0.0)
    with pytest.raises(DomainError):
        scaled_seed(0.5, -2.0)


def test_ratio_half_order_identities():
    # K_{3/2}/K_{1/2} = 1 + 1/z from the recurrence
    assert ratio_cf(0.5, 1.0) == pytest.approx(2.0, rel=1e-14)
    assert ratio_cf(0.5, 2.0) == pytest.approx(1.5, rel=1e-14)


def test_ratio_frozen_oracle_value():
    assert ratio_cf(5.0, 3.0) == pytest.approx(3.65947944067487187, rel=1e-13)


def test_ratio_within_segura_bracket():
    for nu in (0.0, 0.5, 1.0, 5.0, 20.0, 100.0):
        for z in (0.1, 1.0, 3.0, 10.0, 100.0, 700.0):
            r = ratio_cf(nu, z)
            lo, hi = segura_bracket(nu, z)
            assert lo < r <= hi * (1.0 + 1e-12), (nu, z)
            assert r > 1.0


def test_ratio_forward_recursion_consistency():
    """Iterating r_nu = 1/r_{nu-1} + 2 nu/z reproduces the continued
    fraction fifty orders up, to 1e-10 relative."""
    for nu0 in (0.0, 0.3, 0.5, 1.0):
        for z in (0.5, 1.0, 10.0, 100.0):
            r = ratio_cf(nu0, z)
            for k in range(1, 51):
                r = 1.0 / r + 2.0 * (nu0 + k) / z
            assert r == pytest.approx(ratio_cf(nu0 + 50.0, z), rel=1e-10)


def test_ratio_domain_errors():
    with pytest.raises(DomainError):
        ratio_cf(-1.0, 1.0)
    with pytest.raises(DomainError):
        ratio_cf(1.0, 0.0)


def test_nonconvergence_carries_iteration_count():
    try:
        raise ConvergenceError("probe", 123)
    except ConvergenceError as exc:
        assert exc.iterations == 123
