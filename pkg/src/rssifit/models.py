"""Radio propagation model types and forward evaluations.

Three deterministic baselines (free-space, two-ray ground, log-distance) plus
the log-normal shadowing model used for calibrated work: mean received signal
strength falls off linearly in 10*log10(d), and the shadow-fading standard
deviation is itself distance dependent, modelled as a quartic polynomial of
distance with a clamped validity domain.

All calibrated quantities live in RSS (dBm) space rather than path-loss space:
field surveys record RSSI and rarely state the transmit power, and the
path-loss exponent is unaffected because PL = Pt - RSS differs from -RSS only
by a constant. :func:`path_loss_db` and :func:`rss_from_path_loss` convert for
callers who do know Pt.

Everything here is an immutable value; all functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import DataError


def _require_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DataError(f"{name} must be finite, got {value!r}")
    return value


def _require_positive(name: str, value: float) -> float:
    value = _require_finite(name, value)
    if value <= 0:
        raise DataError(f"{name} must be > 0, got {value!r}")
    return value


@dataclass(frozen=True)
class FreeSpaceModel:
    """Line-of-sight model: received power falls off as 1/d^2.

    ``c_t`` is an opaque transceiver constant in linear power units times m^2;
    ``tx_power`` is the transmit power in linear units.
    """

    c_t: float
    tx_power: float

    def __post_init__(self) -> None:
        _require_positive("c_t", self.c_t)
        _require_positive("tx_power", self.tx_power)


@dataclass(frozen=True)
class TwoRayModel:
    """Ground-reflection model: received power falls off as 1/d^4."""

    c_t2: float
    tx_power: float

    def __post_init__(self) -> None:
        _require_positive("c_t2", self.c_t2)
        _require_positive("tx_power", self.tx_power)


@dataclass(frozen=True)
class SigmaPolynomial:
    """Quartic model of the fading standard deviation versus distance.

    sigma(d) = a*d^4 + b*d^3 + c*d^2 + e*d + f, valid on [d_min, d_max].
    Evaluation clamps the distance to the validity domain: a quartic fitted on
    a 20 m survey extrapolates catastrophically (the longwall calibration
    exceeds 100 dB by d = 40 m), so out-of-domain queries return the boundary
    value and are flagged.
    """

    a: float
    b: float
    c: float
    e: float
    f: float
    d_min: float
    d_max: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "e", "f"):
            _require_finite(name, getattr(self, name))
        _require_positive("d_min", self.d_min)
        _require_finite("d_max", self.d_max)
        if self.d_max <= self.d_min:
            raise DataError(
                f"d_max must exceed d_min, got [{self.d_min!r}, {self.d_max!r}]"
            )

    @property
    def coefficients(self) -> tuple[float, float, float, float, float]:
        """Coefficients (a, b, c, e, f), highest power first."""
        return (self.a, self.b, self.c, self.e, self.f)


@dataclass(frozen=True)
class ConstantSigma:
    """Degenerate sigma model: the same standard deviation at every distance."""

    value: float

    def __post_init__(self) -> None:
        _require_finite("value", self.value)
        if self.value < 0:
            raise DataError(f"sigma must be >= 0, got {self.value!r}")


SigmaModel = Union[SigmaPolynomial, ConstantSigma]


@dataclass(frozen=True)
class ShadowedPathLossModel:
    """Log-normal shadowing model in RSS space.

    Mean RSS at distance d is ``rss_d0 - 10 * eta * log10(d / d0)``; the
    fading term is zero-mean Gaussian in dB with standard deviation given by
    ``sigma`` (fixed mean of zero, not configurable). ``sigma`` may be None
    for a freshly fitted distance trend that has no fading model yet.
    """

    d0: float
    rss_d0: float
    eta: float
    sigma: SigmaModel | None = None

    def __post_init__(self) -> None:
        _require_positive("d0", self.d0)
        _require_finite("rss_d0", self.rss_d0)
        _require_finite("eta", self.eta)


@dataclass(frozen=True)
class LinkConstants:
    """Receiver-side planning constants.

    Default sensitivity is -92 dBm, the 1% packet-error-rate threshold of the
    2.4 GHz transceiver module used for the embedded surveys.
    """

    receiver_sensitivity: float = -92.0

    def __post_init__(self) -> None:
        _require_finite("receiver_sensitivity", self.receiver_sensitivity)
        if self.receiver_sensitivity >= 0:
            raise DataError(
                "receiver_sensitivity must be < 0 dBm, "
                f"got {self.receiver_sensitivity!r}"
            )


class SigmaValue(NamedTuple):
    """A sigma evaluation plus whether the distance was clamped."""

    value: float
    clamped: bool


def path_loss_db(pt_dbm: float, pr_dbm: float) -> float:
    """Path loss in dB between transmitted and received power in dBm.

    PL = 10*log10(Pt/Pr) collapses to a subtraction in dB units.
    """
    return _require_finite("pt_dbm", pt_dbm) - _require_finite("pr_dbm", pr_dbm)


def rss_from_path_loss(pt_dbm: float, pl_db: float) -> float:
    """Inverse of :func:`path_loss_db`: received power for a known Pt."""
    return _require_finite("pt_dbm", pt_dbm) - _require_finite("pl_db", pl_db)


def free_space_rx(model: FreeSpaceModel, d: float) -> float:
    """Received power (linear units) at distance d under the 1/d^2 model."""
    d = _require_positive("d", d)
    return model.c_t * model.tx_power / (d * d)


def two_ray_rx(model: TwoRayModel, d: float) -> float:
    """Received power (linear units) at distance d under the 1/d^4 model."""
    d = _require_positive("d", d)
    return model.c_t2 * model.tx_power / (d * d * d * d)


def predict_mean_rss(model: ShadowedPathLossModel, d: float) -> float:
    """Mean RSS in dBm at distance d (the fading term at its zero mean)."""
    d = _require_positive("d", d)
    return model.rss_d0 - 10.0 * model.eta * math.log10(d / model.d0)


def sigma_at(sigma: SigmaModel, d: float) -> SigmaValue:
    """Evaluate a sigma model at distance d.

    For a :class:`SigmaPolynomial` the distance is clamped to the validity
    domain first and the flag reports whether clamping occurred. A
    :class:`ConstantSigma` never clamps.
    """
    d = _require_positive("d", d)
    if isinstance(sigma, ConstantSigma):
        return SigmaValue(sigma.value, False)
    dc = min(max(d, sigma.d_min), sigma.d_max)
    value = (((sigma.a * dc + sigma.b) * dc + sigma.c) * dc + sigma.e) * dc + sigma.f
    return SigmaValue(value, dc != d)


def shadow_pdf(psi: float, sigma: float) -> float:
    """Probability density of the zero-mean Gaussian fading term, in dB."""
    psi = _require_finite("psi", psi)
    sigma = _require_positive("sigma", sigma)
    z = psi / sigma
    return math.exp(-0.5 * z * z) / (math.sqrt(2.0 * math.pi) * sigma)
