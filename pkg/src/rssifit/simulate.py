"""Synthetic survey generation from a calibrated model.

Samples are mean-trend predictions plus Gaussian shadow fading, produced by a
fully specified deterministic generator so a simulation spec maps to a
bit-identical survey on every platform and numpy version. No library RNG is
involved; the algorithm is part of the package contract:

1. Every quantity is a 64-bit unsigned integer with wrapping arithmetic.
   ``mix64`` is the SplitMix64 finalizer:
   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
   z *= 0x94D049BB133111EB; z ^= z >> 31.
2. With GOLDEN = 0x9E3779B97F4A7C15, distance index i and sample index j
   (both 0-based):
   h = mix64(seed + GOLDEN*(i+1)); k = mix64(h + GOLDEN*(j+1)).
3. Two uniforms per sample: u1 = unit(mix64(k + GOLDEN)),
   u2 = unit(mix64(k + 2*GOLDEN)), where unit(w) = ((w >> 11) + 1) * 2^-53,
   which lies in (0, 1] so the logarithm below is always defined.
4. Box-Muller: z = sqrt(-2 ln u1) * cos(2 pi u2); the sample is
   predict_mean_rss(d) + sigma_clamped(d) * z.

Seeding is per (distance index, sample index), not a single stream:
appending distances or extending the sample count never perturbs samples
already generated, so incremental experiments stay reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DataError
from .models import ShadowedPathLossModel, predict_mean_rss, sigma_at
from .surveys import RssiSurvey

_GOLDEN = 0x9E3779B97F4A7C15
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB
_U64 = 0xFFFFFFFFFFFFFFFF


@dataclass(frozen=True)
class SimulationSpec:
    """What to simulate: model, measurement distances, repetitions, seed."""

    model: ShadowedPathLossModel
    distances: tuple[float, ...]
    samples_per_distance: int
    seed: int
    site: str = "simulated"

    def __post_init__(self) -> None:
        if not self.distances:
            raise DataError("distances must be non-empty")
        for d in self.distances:
            if not math.isfinite(d) or d <= 0:
                raise DataError(f"distances must be finite and > 0, got {d!r}")
        if self.samples_per_distance < 1:
            raise DataError(
                f"samples_per_distance must be >= 1, "
                f"got {self.samples_per_distance!r}"
            )
        if not isinstance(self.seed, int):
            raise DataError(f"seed must be an integer, got {self.seed!r}")


def _mix64_int(z: int) -> int:
    """SplitMix64 finalizer on a Python int, masked to 64 bits."""
    z &= _U64
    z ^= z >> 30
    z = (z * _MIX_1) & _U64
    z ^= z >> 27
    z = (z * _MIX_2) & _U64
    z ^= z >> 31
    return z


def _mix64(z: np.ndarray) -> np.ndarray:
    """SplitMix64 finalizer, elementwise on a uint64 array (wrapping)."""
    z = z ^ (z >> np.uint64(30))
    z = z * np.uint64(_MIX_1)
    z = z ^ (z >> np.uint64(27))
    z = z * np.uint64(_MIX_2)
    z = z ^ (z >> np.uint64(31))
    return z


def _unit(w: np.ndarray) -> np.ndarray:
    """Map uint64 to (0, 1]: top 53 bits, shifted off zero."""
    return ((w >> np.uint64(11)) + np.uint64(1)).astype(np.float64) * 2.0**-53


def standard_normals(seed: int, distance_index: int, count: int) -> np.ndarray:
    """The deterministic standard-normal draws for one distance row."""
    # Scalar stage in exact Python ints (numpy warns on scalar overflow);
    # vector stage in uint64 arrays, where wraparound is silent and defined.
    h = _mix64_int(seed + _GOLDEN * (distance_index + 1))
    golden = np.uint64(_GOLDEN)
    golden2 = np.uint64((2 * _GOLDEN) & _U64)
    j = np.arange(1, count + 1, dtype=np.uint64)
    k = _mix64(np.uint64(h) + golden * j)
    u1 = _unit(_mix64(k + golden))
    u2 = _unit(_mix64(k + golden2))
    return np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * math.pi * u2)


def simulate_survey(spec: SimulationSpec) -> RssiSurvey:
    """Generate the survey a calibrated model predicts for a sampling plan.

    Each sample is predict_mean_rss(d) + sigma_clamped(d) * z with z from the
    module's documented generator. A model without a sigma model (or with
    sigma identically zero) yields noiseless samples equal to the mean trend.
    """
    model = spec.model
    rows = []
    for i, d in enumerate(spec.distances):
        mean = predict_mean_rss(model, d)
        if model.sigma is None:
            sigma = 0.0
        else:
            sigma = sigma_at(model.sigma, d).value
            if sigma < 0:
                raise DataError(
                    f"sigma model is negative ({sigma:.4g} dB) at "
                    f"d = {d:.4g} m; cannot simulate"
                )
        if sigma == 0.0:
            samples = np.full(spec.samples_per_distance, mean)
        else:
            z = standard_normals(spec.seed, i, spec.samples_per_distance)
            samples = mean + sigma * z
        rows.append((float(d), tuple(float(s) for s in samples)))
    return RssiSurvey(
        site=spec.site,
        rows=tuple(rows),
        metadata=(
            ("generator", "splitmix64-boxmuller-v1"),
            ("seed", str(spec.seed)),
        ),
    )
