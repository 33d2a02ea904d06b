import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logbessel import (
    CFMethod,
    CharacteristicEvaluator,
    DomainError,
    error_report,
    gauss_kronrod_integrate,
    gil_pelaez_cdf,
    gil_pelaez_pdf,
    integrate_finite,
    psi,
    student_cf,
    student_pdf_closed,
)

INV_PI = 1.0 / math.pi


# ---------------------------------------------------------------------------
# psi and the characteristic function
# ---------------------------------------------------------------------------

def test_psi_limit_and_closed_form():
    for nu in (0.3, 1.0, 7.5, 500.0):
        assert psi(nu, 0.0) == 0.5
    # psi_{1/2}(1) = K_{1/2}(1)/Gamma(1/2) * (1/2)^{1/2} = e^{-1}/2
    assert psi(0.5, 1.0) == pytest.approx(0.183939720585721161, rel=1e-13)


def test_psi_large_order_small_argument_stays_normal():
    v = psi(500.0, 1e-3)
    assert 0.0 < v <= 0.5
    assert v == pytest.approx(0.5, abs=1e-3)


def test_psi_domain():
    with pytest.raises(DomainError):
        psi(0.0, 1.0)
    with pytest.raises(DomainError):
        psi(1.0, -0.1)


def test_cf_normalization_exact():
    for method in CFMethod:
        for nu in (1.0, 10.0, 10000.0):
            assert student_cf(nu, 0.0, method) == 1.0


def test_cf_cauchy_closed_form():
    # nu = 1 is Cauchy: phi(t) = exp(-|t|)
    for t in (0.1, 1.0, 5.0):
        assert student_cf(1.0, t) == pytest.approx(math.exp(-t), rel=1e-12)


def test_cf_evenness_exact():
    for nu in (1.0, 3.7, 100.0):
        for t in (0.3, 1.7, 20.0):
            assert student_cf(nu, t) == student_cf(nu, -t)


def test_cf_bounds_and_monotone_decay():
    for nu in (0.5, 2.0, 30.0, 10000.0):
        ts = [1e-3 * 1.35 ** k for k in range(26)]
        vals = [student_cf(nu, t) for t in ts]
        assert all(0.0 <= v <= 1.0 for v in vals)
        assert all(a > b for a, b in zip(vals, vals[1:])), nu


@settings(max_examples=60, deadline=None)
@given(st.floats(min_value=0.1, max_value=300.0),
       st.floats(min_value=-30.0, max_value=30.0))
def test_cf_range_property(nu, t):
    v = student_cf(nu, t)
    assert 0.0 <= v <= 1.0
    assert v == student_cf(nu, -t)


def test_method_agreement_where_all_finite():
    for nu in (0.5, 4.0, 61.0, 240.0):
        for t in (0.05, 0.8, 3.0):
            a = student_cf(nu, t, CFMethod.LOG_RECURSION)
            b = student_cf(nu, t, CFMethod.LOG_DIRECT)
            assert b == pytest.approx(a, rel=1e-12), (nu, t)
            c = student_cf(nu, t, CFMethod.DIRECT)
            if math.isfinite(c):
                assert c == pytest.approx(a, rel=1e-10), (nu, t)


def test_direct_method_overflow_is_surfaced():
    v = student_cf(1e4, 1e-3, CFMethod.DIRECT)
    assert not math.isfinite(v)
    w = student_cf(1e4, 1e-3, CFMethod.LOG_RECURSION)
    assert 0.0 < w < 1.0


def test_log_direct_overflows_where_scaled_values_cannot_reach():
    v = student_cf(1e4, 1e-3, CFMethod.LOG_DIRECT)
    assert not math.isfinite(v)


def test_single_precision_emulation_overflows_earlier():
    # K_50(1) is representable in double but far beyond binary32
    assert math.isfinite(student_cf(100.0, 0.1, CFMethod.DIRECT))
    assert not math.isfinite(
        student_cf(100.0, 0.1, CFMethod.DIRECT, single_precision=True))


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

def test_known_integrals_on_half_line():
    res = gauss_kronrod_integrate(lambda t: math.exp(-t))
    assert res.converged
    assert res.value == pytest.approx(1.0, abs=1e-10)
    res = gauss_kronrod_integrate(lambda t: math.exp(-0.5 * t * t))
    assert res.value == pytest.approx(math.sqrt(math.pi / 2.0), abs=1e-9)
    # oscillatory decay, like the inversion integrands
    res = gauss_kronrod_integrate(lambda t: math.cos(t) * math.exp(-t))
    assert res.value == pytest.approx(0.5, abs=1e-9)


def test_finite_interval_rule():
    res = integrate_finite(math.sin, 0.0, math.pi)
    assert res.value == pytest.approx(2.0, rel=1e-12)


def test_quadrature_reports_nonconvergence():
    # three panels cannot resolve a fast oscillation to 1e-13
    res = gauss_kronrod_integrate(
        lambda t: math.cos(40.0 * t) * math.exp(-t), abs_tol=1e-13,
        rel_tol=1e-13, max_subdiv=3)
    assert not res.converged
    assert res.subintervals == 3


def test_quadrature_env_override(monkeypatch):
    monkeypatch.setenv("LOGBESSEL_MAX_SUBDIV", "4")
    res = gauss_kronrod_integrate(
        lambda t: math.cos(7.0 * t) * math.exp(-0.1 * t), abs_tol=1e-13,
        rel_tol=1e-13)
    assert res.subintervals <= 4


def test_quadrature_tolerance_validation():
    with pytest.raises(DomainError):
        gauss_kronrod_integrate(lambda t: 0.0, abs_tol=0.0)


# ---------------------------------------------------------------------------
# inversion
# ---------------------------------------------------------------------------

def test_pdf_cauchy_at_origin():
    res = gil_pelaez_pdf(1.0, 0.0)
    assert res.converged
    assert res.value == pytest.approx(INV_PI, abs=1e-8)


def test_pdf_matches_closed_form_values():
    # frozen: Gamma(5.5)/(sqrt(10 pi) Gamma(5))
    assert student_pdf_closed(10.0, 0.0) == pytest.approx(
        0.389108383966031051, rel=1e-13)
    res = gil_pelaez_pdf(10.0, 0.0)
    assert res.value == pytest.approx(0.389108383966031051, abs=1e-8)
    assert student_pdf_closed(2.0, 1.0) == pytest.approx(
        0.192450089729875255, rel=1e-13)
    res = gil_pelaez_pdf(2.0, 1.0)
    assert res.value == pytest.approx(0.192450089729875255, abs=1e-8)


def test_pdf_closed_form_cauchy_and_normal_limit():
    assert student_pdf_closed(1.0, 0.0) == pytest.approx(INV_PI, rel=1e-13)
    assert student_pdf_closed(1.0, 1.0) == pytest.approx(0.5 * INV_PI,
                                                         rel=1e-13)
    assert student_pdf_closed(1e6, 0.0) == pytest.approx(
        1.0 / math.sqrt(2.0 * math.pi), abs=1e-6)


def test_cdf_anchors():
    for nu in (1.0, 7.0, 100.0):
        res = gil_pelaez_cdf(nu, 0.0)
        assert res.value == pytest.approx(0.5, abs=1e-10)
    # Cauchy: F(1) = 1/2 + atan(1)/pi = 3/4
    res = gil_pelaez_cdf(1.0, 1.0)
    assert res.value == pytest.approx(0.75, abs=1e-8)
    res = gil_pelaez_cdf(10.0, 100.0, abs_tol=1e-11, rel_tol=1e-10)
    assert res.value == pytest.approx(1.0, abs=1e-8)


def test_cdf_matches_pdf_derivative():
    h = 1e-3
    for nu in (2.0, 10.0):
        for x in (-1.0, 0.0, 1.0):
            hi = gil_pelaez_cdf(nu, x + h).value
            lo = gil_pelaez_cdf(nu, x - h).value
            pdf = gil_pelaez_pdf(nu, x).value
            assert (hi - lo) / (2.0 * h) == pytest.approx(pdf, abs=1e-5)


def test_pdf_mass_matches_closed_form_mass():
    """Integrated inversion pdf equals integrated closed-form pdf over
    [-50, 50] to 1e-6.  (For nu = 1 and 2 the tail mass beyond 50 is far
    above 1e-6, so the comparison is against the truncated mass, not 1.)"""
    for nu in (1.0, 2.0, 10.0, 100.0):
        closed = integrate_finite(lambda x: student_pdf_closed(nu, x),
                                  -50.0, 50.0, abs_tol=1e-9, rel_tol=1e-9)
        inverted = integrate_finite(
            lambda x: gil_pelaez_pdf(nu, x, abs_tol=1e-9).value,
            -50.0, 50.0, abs_tol=1e-8, rel_tol=1e-8)
        assert closed.converged
        assert inverted.value == pytest.approx(closed.value, abs=1e-6), nu


# ---------------------------------------------------------------------------
# error report
# ---------------------------------------------------------------------------

def test_error_report_accuracy_row():
    rows = error_report([1.0], [0.0], [CFMethod.LOG_RECURSION])
    assert len(rows) == 1
    row = rows[0]
    assert row.abs_error <= 1e-8
    assert row.cf_overflowed is False


def test_error_report_flags_direct_overflow():
    rows = error_report([10000.0], [0.0], [CFMethod.DIRECT])
    assert rows[0].cf_overflowed is True
    rows = error_report([10000.0], [0.0], [CFMethod.LOG_RECURSION])
    assert rows[0].cf_overflowed is False
    assert rows[0].abs_error <= 1e-6


def test_error_report_single_precision_flags_at_hundred():
    rows = error_report([100.0], [0.0], [CFMethod.DIRECT],
                        single_precision=True)
    assert rows[0].cf_overflowed is True
    rows = error_report([100.0], [0.0], [CFMethod.DIRECT])
    assert rows[0].cf_overflowed is False


def test_error_report_validates_grids():
    with pytest.raises(DomainError):
        error_report([], [0.0], [CFMethod.DIRECT])


def test_evaluator_memo_reuses_values():
    ev = CharacteristicEvaluator(10.0, CFMethod.LOG_RECURSION)
    a = ev(0.7)
    assert ev._memo  # populated
    assert ev(0.7) == a
