"""Model inversion, confidence intervals, and range planning."""

import math
from statistics import NormalDist

import numpy as np
import pytest

from rssifit import (
    ConstantSigma,
    DataError,
    LinkConstants,
    NumericalError,
    ShadowedPathLossModel,
    SigmaPolynomial,
    confidence_interval,
    estimate_distance,
    max_range,
    predict_mean_rss,
)


def model(eta=2.0, rss_d0=-40.0, d0=1.0, sigma=None):
    return ShadowedPathLossModel(d0=d0, rss_d0=rss_d0, eta=eta, sigma=sigma)


def test_estimate_at_reference_rss_returns_d0():
    assert estimate_distance(model(), -40.0) == pytest.approx(1.0)
    assert estimate_distance(model(d0=3.0, rss_d0=-55.0), -55.0) == pytest.approx(3.0)


def test_decade_inversion():
    assert estimate_distance(model(eta=2.0, rss_d0=-40.0), -60.0) == pytest.approx(10.0)


def test_inversion_of_surveyed_trend_example():
    # forward at 10 m: -51.65 - 10*2.14 = -73.05; inversion must return 10 m
    m = model(eta=2.14, rss_d0=-51.65)
    assert predict_mean_rss(m, 10.0) == pytest.approx(-73.05)
    assert estimate_distance(m, -73.05) == pytest.approx(10.0, rel=1e-12)


def test_round_trip_over_log_grid_and_exponents():
    for eta in (0.5, 1.0, 2.0, 2.14, 4.0):
        m = model(eta=eta)
        for d in np.geomspace(1.0, 100.0, 50):
            rss = predict_mean_rss(m, float(d))
            assert abs(estimate_distance(m, rss) - d) / d <= 1e-9


def test_nonpositive_eta_is_not_invertible():
    with pytest.raises(DataError):
        estimate_distance(model(eta=0.0), -60.0)
    with pytest.raises(DataError):
        estimate_distance(model(eta=-1.5), -60.0)
    with pytest.raises(DataError):
        estimate_distance(model(), math.inf)


def test_interval_endpoints_from_hand_evaluated_quantile():
    # derived by hand: d = 10^((rss_d0 - rss -/+ z*sigma)/(10*eta)) with
    # z the exact 97.5% normal quantile and sigma constant 2 dB
    m = model(sigma=ConstantSigma(2.0))
    est = confidence_interval(m, -60.0, level=0.95)
    z = NormalDist().inv_cdf(0.975)
    assert est.d_hat == pytest.approx(10.0, rel=1e-12)
    assert est.d_lo == pytest.approx(10 ** ((20.0 - z * 2.0) / 20.0), rel=1e-12)
    assert est.d_hi == pytest.approx(10 ** ((20.0 + z * 2.0) / 20.0), rel=1e-12)
    assert est.d_lo == pytest.approx(6.368008, abs=1e-5)
    assert est.d_hi == pytest.approx(15.703498, abs=1e-5)
    assert est.sigma_used == 2.0
    assert not est.clamped


def test_zero_sigma_degenerates_to_point_interval():
    est = confidence_interval(model(sigma=ConstantSigma(0.0)), -60.0)
    assert est.d_lo == est.d_hat == est.d_hi


def test_higher_level_strictly_contains_lower():
    m = model(sigma=ConstantSigma(2.0))
    inner = confidence_interval(m, -60.0, level=0.95)
    outer = confidence_interval(m, -60.0, level=0.99)
    assert outer.d_lo < inner.d_lo
    assert outer.d_hi > inner.d_hi
    assert inner.d_lo < inner.d_hat < inner.d_hi


def test_interval_is_log_symmetric_for_constant_sigma():
    m = model(eta=1.7, rss_d0=-44.0, sigma=ConstantSigma(3.1))
    est = confidence_interval(m, -71.0, level=0.9)
    assert est.d_hi / est.d_hat == pytest.approx(est.d_hat / est.d_lo, rel=1e-9)


def test_interval_uses_sigma_at_point_estimate_with_clamp_flag():
    sigma = SigmaPolynomial(a=0, b=0, c=0, e=0.1, f=1.0, d_min=1.0, d_max=20.0)
    m = model(sigma=sigma)
    inside = confidence_interval(m, -60.0)  # d_hat = 10, inside the domain
    assert inside.sigma_used == pytest.approx(2.0)
    assert not inside.clamped
    outside = confidence_interval(m, -70.0)  # d_hat ~ 31.6, beyond d_max
    assert outside.sigma_used == pytest.approx(3.0)  # held at sigma(20)
    assert outside.clamped


def test_interval_requires_sigma_and_valid_level():
    with pytest.raises(DataError):
        confidence_interval(model(), -60.0)
    m = model(sigma=ConstantSigma(2.0))
    for level in (0.0, 1.0, -0.5, 1.5):
        with pytest.raises(DataError):
            confidence_interval(m, -60.0, level=level)


def test_negative_fitted_sigma_is_a_numerical_error():
    sigma = SigmaPolynomial(a=0, b=0, c=0, e=0, f=-1.0, d_min=1.0, d_max=20.0)
    with pytest.raises(NumericalError):
        confidence_interval(model(sigma=sigma), -60.0)


def test_zero_margin_range_matches_closed_form():
    # closed form: predict(d) = sens  =>  d = 10^((rss_d0 - sens)/(10*eta))
    m = model(eta=2.14, rss_d0=-51.65, sigma=ConstantSigma(2.0))
    plan = max_range(m, LinkConstants(receiver_sensitivity=-92.0), outage_z=0.0)
    closed = 10 ** ((-51.65 + 92.0) / (10 * 2.14))
    assert plan.max_range == pytest.approx(closed, abs=0.01)
    assert plan.margin_db == 0.0
    assert plan.outage_z == 0.0
    assert plan.sensitivity == -92.0


def test_margin_shrinks_range_monotonically():
    m = model(eta=2.14, rss_d0=-51.65, sigma=ConstantSigma(3.0))
    consts = LinkConstants()
    ranges = [
        max_range(m, consts, outage_z=z).max_range for z in (0.0, 1.0, 1.96, 3.0)
    ]
    assert all(a > b for a, b in zip(ranges, ranges[1:]))
    plan = max_range(m, consts, outage_z=1.96)
    assert plan.margin_db == pytest.approx(1.96 * 3.0)


def test_margin_range_obeys_closed_form_for_constant_sigma():
    m = model(eta=2.0, rss_d0=-40.0, sigma=ConstantSigma(4.0))
    plan = max_range(m, LinkConstants(receiver_sensitivity=-92.0), outage_z=1.5)
    closed = 10 ** ((-40.0 + 92.0 - 1.5 * 4.0) / 20.0)
    assert plan.max_range == pytest.approx(closed, abs=0.01)


def test_range_decreases_with_exponent():
    consts = LinkConstants()
    r1 = max_range(model(eta=1.5, rss_d0=-50.0), consts).max_range
    r2 = max_range(model(eta=2.5, rss_d0=-50.0), consts).max_range
    assert r2 < r1


def test_clamped_sigma_flagged_when_solution_extrapolates():
    sigma = SigmaPolynomial(a=0, b=0, c=0, e=0.1, f=1.0, d_min=1.0, d_max=20.0)
    m = model(eta=2.14, rss_d0=-51.65, sigma=sigma)
    plan = max_range(m, LinkConstants(), outage_z=1.0)
    assert plan.max_range > 20.0
    assert plan.clamped
    assert plan.margin_db == pytest.approx(3.0)  # sigma held at sigma(20)


def test_sensitivity_above_reference_power_means_no_coverage():
    with pytest.raises(DataError):
        max_range(model(rss_d0=-51.65), LinkConstants(receiver_sensitivity=-40.0))


def test_range_beyond_search_span_is_a_numerical_error():
    # eta = 0.1 puts the range at 10^52 m, far past the 1e6 m search ceiling
    m = model(eta=0.1, rss_d0=-40.0)
    with pytest.raises(NumericalError):
        max_range(m, LinkConstants(receiver_sensitivity=-92.0))


def test_plan_z_requires_sigma_when_positive():
    with pytest.raises(DataError):
        max_range(model(), LinkConstants(), outage_z=1.0)
    with pytest.raises(DataError):
        max_range(model(sigma=ConstantSigma(2.0)), LinkConstants(), outage_z=-1.0)
