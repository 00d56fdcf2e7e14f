"""Forward propagation models and sigma evaluation."""

import math

import pytest

from rssifit import (
    ConstantSigma,
    DataError,
    FreeSpaceModel,
    LinkConstants,
    ShadowedPathLossModel,
    SigmaPolynomial,
    TwoRayModel,
    free_space_rx,
    path_loss_db,
    predict_mean_rss,
    rss_from_path_loss,
    shadow_pdf,
    sigma_at,
    two_ray_rx,
)


def test_free_space_power_quarters_when_distance_doubles():
    m = FreeSpaceModel(c_t=1.0, tx_power=4.0)
    assert free_space_rx(m, 2.0) == pytest.approx(free_space_rx(m, 1.0) / 4.0)


def test_two_ray_power_sixteenths_when_distance_doubles():
    m = TwoRayModel(c_t2=1.0, tx_power=4.0)
    assert two_ray_rx(m, 2.0) == pytest.approx(two_ray_rx(m, 1.0) / 16.0)


def test_path_loss_is_pt_minus_pr():
    assert path_loss_db(10.0, -60.0) == 70.0
    assert rss_from_path_loss(10.0, 70.0) == -60.0


def test_mean_rss_drops_10_eta_per_decade():
    m = ShadowedPathLossModel(d0=1.0, rss_d0=-40.0, eta=2.0)
    assert predict_mean_rss(m, 1.0) == -40.0
    assert predict_mean_rss(m, 10.0) == pytest.approx(-60.0)
    assert predict_mean_rss(m, 100.0) == pytest.approx(-80.0)


def test_mean_rss_respects_reference_distance():
    m = ShadowedPathLossModel(d0=2.0, rss_d0=-50.0, eta=3.0)
    assert predict_mean_rss(m, 2.0) == -50.0
    assert predict_mean_rss(m, 20.0) == pytest.approx(-80.0)


def test_waveguide_exponent_below_two_decays_slower():
    fast = ShadowedPathLossModel(d0=1.0, rss_d0=-40.0, eta=2.0)
    slow = ShadowedPathLossModel(d0=1.0, rss_d0=-40.0, eta=1.5)
    assert predict_mean_rss(slow, 50.0) > predict_mean_rss(fast, 50.0)


def test_sigma_polynomial_evaluates_horner_form():
    # sigma(d) = d^4 + 2d^3 + 3d^2 + 4d + 5 at d=2: 16+16+12+8+5 = 57
    s = SigmaPolynomial(a=1, b=2, c=3, e=4, f=5, d_min=1.0, d_max=10.0)
    value = sigma_at(s, 2.0)
    assert value.value == pytest.approx(57.0)
    assert not value.clamped


def test_sigma_polynomial_clamps_outside_domain():
    s = SigmaPolynomial(a=0, b=0, c=0, e=1, f=0, d_min=1.0, d_max=20.0)
    below = sigma_at(s, 0.5)
    above = sigma_at(s, 40.0)
    assert below == (1.0, True)
    assert above == (20.0, True)
    assert sigma_at(s, 20.0) == (20.0, False)


def test_constant_sigma_never_clamps():
    s = ConstantSigma(2.0)
    assert sigma_at(s, 0.001) == (2.0, False)
    assert sigma_at(s, 1e6) == (2.0, False)


def test_shadow_pdf_matches_gaussian_density():
    # oracle: density of N(0, sigma) at psi, closed form recomputed inline
    sigma, psi = 2.0, 1.5
    expected = math.exp(-(psi**2) / (2 * sigma**2)) / (sigma * math.sqrt(2 * math.pi))
    assert shadow_pdf(psi, sigma) == pytest.approx(expected, rel=1e-15)
    assert shadow_pdf(0.0, 1.0) == pytest.approx(1 / math.sqrt(2 * math.pi))


def test_shadow_pdf_symmetric_and_normalized():
    assert shadow_pdf(1.3, 2.5) == shadow_pdf(-1.3, 2.5)
    # trapezoid integral over +-8 sigma approximates 1
    sigma = 3.0
    steps = 4000
    width = 16 * sigma / steps
    total = sum(
        shadow_pdf(-8 * sigma + i * width, sigma) for i in range(steps + 1)
    )
    total -= 0.5 * (shadow_pdf(-8 * sigma, sigma) + shadow_pdf(8 * sigma, sigma))
    assert total * width == pytest.approx(1.0, abs=1e-6)


@pytest.mark.parametrize("bad_d", [0.0, -1.0, math.nan, math.inf])
def test_nonpositive_distance_rejected(bad_d):
    m = ShadowedPathLossModel(d0=1.0, rss_d0=-40.0, eta=2.0)
    with pytest.raises(DataError):
        predict_mean_rss(m, bad_d)


def test_model_validation_rejects_bad_fields():
    with pytest.raises(DataError):
        ShadowedPathLossModel(d0=0.0, rss_d0=-40.0, eta=2.0)
    with pytest.raises(DataError):
        ShadowedPathLossModel(d0=1.0, rss_d0=math.nan, eta=2.0)
    with pytest.raises(DataError):
        FreeSpaceModel(c_t=-1.0, tx_power=1.0)
    with pytest.raises(DataError):
        ConstantSigma(-0.5)
    with pytest.raises(DataError):
        SigmaPolynomial(a=0, b=0, c=0, e=0, f=1, d_min=5.0, d_max=5.0)
    with pytest.raises(DataError):
        LinkConstants(receiver_sensitivity=3.0)


def test_models_are_immutable():
    m = ShadowedPathLossModel(d0=1.0, rss_d0=-40.0, eta=2.0)
    with pytest.raises(AttributeError):
        m.eta = 3.0


def test_default_sensitivity_is_minus_92_dbm():
    assert LinkConstants().receiver_sensitivity == -92.0
