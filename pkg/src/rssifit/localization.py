"""Model inversion: distance from RSSI, confidence intervals, range planning.

The mean-RSS trend is exactly invertible, so the point estimate is closed
form. Interval endpoints come from re-inverting rss +/- z*sigma, where sigma
is the fading spread evaluated once at the point estimate (a single
fixed-point step; sigma varies slowly and is clamped, so iterating to
self-consistency buys nothing and would blur the definition).

Range planning asks the opposite question: out to what distance does the
predicted signal, less an outage margin of z sigma, stay above the receiver
sensitivity? That is solved by bisection rather than algebra so clamped or
non-monotone sigma shapes are handled uniformly; the closed-form inversion
(valid when z = 0) serves as an independent check elsewhere. Planned ranges
beyond the surveyed span rest on a clamped sigma and deserve skepticism, so
the result records whether clamping occurred.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from statistics import NormalDist

import numpy as np

from .errors import DataError, NumericalError
from .models import (
    LinkConstants,
    ShadowedPathLossModel,
    predict_mean_rss,
    sigma_at,
)

# Bisection search ceiling and tolerance for max_range, in metres.
RANGE_SEARCH_MAX = 1e6
RANGE_TOLERANCE = 0.01


@dataclass(frozen=True)
class LocalizationEstimate:
    """Distance estimate with a two-sided confidence interval.

    ``sigma_used`` is the fading SD (dB) the interval was built from;
    ``clamped`` reports whether its evaluation hit the sigma model's domain
    boundary, which flags an extrapolated interval.
    """

    d_hat: float
    d_lo: float
    d_hi: float
    level: float
    sigma_used: float
    clamped: bool

    def __post_init__(self) -> None:
        if not 0.0 < self.level < 1.0:
            raise DataError(f"level must be in (0, 1), got {self.level!r}")
        if not 0.0 < self.d_lo <= self.d_hat <= self.d_hi:
            raise DataError(
                "interval must satisfy 0 < d_lo <= d_hat <= d_hi, got "
                f"({self.d_lo!r}, {self.d_hat!r}, {self.d_hi!r})"
            )


@dataclass(frozen=True)
class LinkPlan:
    """Maximum usable range under an outage margin of ``outage_z`` sigma."""

    max_range: float
    margin_db: float
    outage_z: float
    sensitivity: float
    clamped: bool

    def __post_init__(self) -> None:
        if self.max_range <= 0:
            raise DataError(f"max_range must be > 0, got {self.max_range!r}")
        if self.margin_db < 0:
            raise DataError(f"margin_db must be >= 0, got {self.margin_db!r}")


def estimate_distance(model: ShadowedPathLossModel, rss: float) -> float:
    """Invert the mean trend: d = d0 * 10^((rss_d0 - rss) / (10 eta)).

    Exact inverse of the mean-RSS prediction. A non-positive eta has no
    inverse (RSS would not decrease with distance).
    """
    if model.eta <= 0:
        raise DataError(
            f"cannot invert a model with eta <= 0 (eta = {model.eta!r})"
        )
    if not math.isfinite(rss):
        raise DataError(f"rss must be finite, got {rss!r}")
    return model.d0 * 10.0 ** ((model.rss_d0 - rss) / (10.0 * model.eta))


def _sigma_for(model: ShadowedPathLossModel, d: float) -> tuple[float, bool]:
    if model.sigma is None:
        raise DataError(
            "model has no fading model; fit or attach a sigma model first"
        )
    value, clamped = sigma_at(model.sigma, d)
    if value < 0:
        raise NumericalError(
            f"fitted sigma is negative ({value:.4g} dB) at d = {d:.4g} m; "
            "the sigma model is invalid there"
        )
    return value, clamped


def confidence_interval(
    model: ShadowedPathLossModel, rss: float, level: float = 0.95
) -> LocalizationEstimate:
    """Distance estimate with a two-sided confidence interval.

    sigma is evaluated at the point estimate, then the endpoints are the
    trend inversions of rss +/- z*sigma with z the two-sided normal quantile
    for ``level``. A stronger signal means a shorter distance, so the +z
    perturbation gives the lower endpoint.
    """
    if not 0.0 < level < 1.0:
        raise DataError(f"level must be in (0, 1), got {level!r}")
    d_hat = estimate_distance(model, rss)
    sigma, clamped = _sigma_for(model, d_hat)
    z = NormalDist().inv_cdf((1.0 + level) / 2.0)
    return LocalizationEstimate(
        d_hat=d_hat,
        d_lo=estimate_distance(model, rss + z * sigma),
        d_hi=estimate_distance(model, rss - z * sigma),
        level=level,
        sigma_used=sigma,
        clamped=clamped,
    )


def _downlink_margin(model: ShadowedPathLossModel, outage_z: float, d: float) -> float:
    """predict(d) - z*sigma(d) - sensitivity, without the sensitivity term."""
    mean = predict_mean_rss(model, d)
    if outage_z == 0.0:
        return mean
    sigma, _ = _sigma_for(model, d)
    return mean - outage_z * sigma


def max_range(
    model: ShadowedPathLossModel,
    constants: LinkConstants = LinkConstants(),
    outage_z: float = 0.0,
) -> LinkPlan:
    """Largest distance whose margin-adjusted RSS stays above sensitivity.

    Finds the last point of {d : predict(d) - z*sigma(d) >= sensitivity} on
    [d0, 1e6 m]. A coarse logarithmic scan locates the final sign change
    (sigma need not be monotone, so the first bracket from the left would be
    wrong), then bisection tightens it to +/- 0.01 m.
    """
    if model.eta <= 0:
        raise DataError(f"max_range requires eta > 0, got {model.eta!r}")
    if not math.isfinite(outage_z) or outage_z < 0:
        raise DataError(f"outage_z must be finite and >= 0, got {outage_z!r}")
    sens = constants.receiver_sensitivity
    if sens >= model.rss_d0:
        raise DataError(
            f"sensitivity {sens!r} dBm is not below rss_d0 {model.rss_d0!r} "
            "dBm; the link has no coverage even at the reference distance"
        )

    def objective(d: float) -> float:
        return _downlink_margin(model, outage_z, d) - sens

    grid = np.geomspace(model.d0, RANGE_SEARCH_MAX, 4097)
    last_ok = None
    first_bad_after = None
    for d in grid:
        if objective(float(d)) >= 0.0:
            last_ok = float(d)
            first_bad_after = None
        elif first_bad_after is None:
            first_bad_after = float(d)
    if last_ok is None:
        raise DataError(
            "margin-adjusted signal is below sensitivity everywhere at and "
            "beyond the reference distance"
        )
    if first_bad_after is None:
        raise NumericalError(
            f"margin-adjusted signal still above sensitivity at "
            f"{RANGE_SEARCH_MAX:g} m; no finite range within the search span"
        )

    # Return the feasible endpoint; halving the bracket below half the
    # tolerance keeps it within RANGE_TOLERANCE of the true boundary.
    lo, hi = last_ok, first_bad_after
    while hi - lo > 0.5 * RANGE_TOLERANCE:
        mid = 0.5 * (lo + hi)
        if objective(mid) >= 0.0:
            lo = mid
        else:
            hi = mid
    solution = lo
    if outage_z == 0.0 or model.sigma is None:
        margin, clamped = 0.0, False
    else:
        sigma, clamped = _sigma_for(model, solution)
        margin = outage_z * sigma
    return LinkPlan(
        max_range=solution,
        margin_db=margin,
        outage_z=outage_z,
        sensitivity=sens,
        clamped=clamped,
    )
