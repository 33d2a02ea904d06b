import math

import pytest

from logbessel import DOUBLE, SINGLE, DomainError, FloatSystem, \
    derived_levels, parse_float_system


def _matches_printed(log_x, mantissa, exp10):
    # agreement with a 4-significant-digit table entry written as
    # mantissa * 10^exp10, within one unit of the last printed digit
    # (the table mixes rounding and truncation).  Compared through logs
    # because the smallest entries are subnormal in double.
    log_printed = math.log(mantissa) + exp10 * math.log(10.0)
    return abs(log_x - log_printed) < math.log1p(1.05e-3)


def test_single_levels_match_reference_table():
    assert _matches_printed(SINGLE.log_overflow_level, 3.403, 38)
    assert _matches_printed(SINGLE.log_underflow_level, 1.175, -38)
    assert _matches_printed(SINGLE.log_smallest_subnormal, 1.401, -45)


def test_double_levels_match_reference_table():
    assert _matches_printed(DOUBLE.log_overflow_level, 1.797, 308)
    assert _matches_printed(DOUBLE.log_underflow_level, 2.225, -308)
    assert _matches_printed(DOUBLE.log_smallest_subnormal, 4.941, -324)


def test_double_overflow_level_is_representable():
    # (1 - 2^-52) 2^1024 with the 52 stored significand bits convention:
    # one ulp below the largest double, and exactly representable
    assert DOUBLE.overflow_level == 1.7976931348623155e308
    assert math.isfinite(DOUBLE.overflow_level)
    assert math.isfinite(SINGLE.overflow_level)


def test_tiny_system_by_hand():
    sys_ = FloatSystem(precision_bits=1, min_exponent=-1, max_exponent=1)
    sdn, ufl, ofl = derived_levels(sys_)
    assert ofl == 2.0
    assert ufl == 0.5
    assert sdn == 0.25


def test_level_ordering_invariant():
    for sys_ in (SINGLE, DOUBLE, FloatSystem(5, -7, 9)):
        sdn, ufl, ofl = derived_levels(sys_)
        assert 0.0 < sdn < ufl < 1.0 < ofl


def test_log_levels_consistent_with_linear():
    for sys_ in (SINGLE, DOUBLE):
        assert sys_.log_overflow_level == pytest.approx(
            math.log(sys_.overflow_level), rel=1e-15)
        assert sys_.log_underflow_level == pytest.approx(
            math.log(sys_.underflow_level), rel=1e-15)


def test_invalid_systems_rejected():
    with pytest.raises(DomainError):
        FloatSystem(0, -5, 5)
    with pytest.raises(DomainError):
        FloatSystem(10, 1, 5)
    with pytest.raises(DomainError):
        FloatSystem(10, -5, 0)


def test_parse_float_system():
    assert parse_float_system("single") is SINGLE
    assert parse_float_system("double") is DOUBLE
    custom = parse_float_system("custom:10,-5,100")
    assert custom == FloatSystem(10, -5, 100)
    for bad in ("quad", "custom:1,2", "custom:a,b,c"):
        with pytest.raises(DomainError):
            parse_float_system(bad)
