"""RSSI path-loss calibration, distance estimation, and range planning.

Fits a log-normal shadowing model (mean RSS linear in 10*log10(d), fading SD
a quartic polynomial of distance) to per-distance survey statistics, then
inverts it for localization, confidence intervals, and maximum-range
planning. Ships the underground-mine survey tables the model family was
developed on, a deterministic survey simulator, and CSV/JSON codecs; the
``rssifit`` command exposes the pipeline.
"""

from .calibration import (
    FitReport,
    GoodnessOfFit,
    PrrCorrelations,
    SigmaFitReport,
    fit_path_loss,
    fit_sigma_polynomial,
    goodness_of_fit,
    prr_correlations,
    residual_y,
    stationarity_sums,
)
from .dataio import (
    load_stats_csv,
    load_survey_csv,
    model_from_json,
    model_to_json,
    save_stats_csv,
    save_survey_csv,
)
from .datasets import (
    DatasetRecord,
    PublishedFit,
    dataset_names,
    embedded_dataset,
    published_fit,
)
from .errors import (
    DataError,
    DatasetNotFoundError,
    DegenerateDataError,
    FormatError,
    InsufficientDataError,
    NumericalError,
    RssifitError,
    SingularMatrixError,
)
from .localization import (
    LinkPlan,
    LocalizationEstimate,
    confidence_interval,
    estimate_distance,
    max_range,
)
from .models import (
    ConstantSigma,
    FreeSpaceModel,
    LinkConstants,
    ShadowedPathLossModel,
    SigmaPolynomial,
    SigmaValue,
    TwoRayModel,
    free_space_rx,
    path_loss_db,
    predict_mean_rss,
    rss_from_path_loss,
    shadow_pdf,
    sigma_at,
    two_ray_rx,
)
from .numerics import (
    CONDITION_FALLBACK,
    DenseSystem,
    LineFit,
    PolynomialFit,
    SolveDiagnostics,
    ols_line,
    orthogonal_solve,
    polyfit_quartic,
    polyval,
    solve_dense,
)
from .simulate import SimulationSpec, simulate_survey, standard_normals
from .surveys import DistanceStats, RssiSurvey, SurveyStats, survey_stats

__version__ = "0.1.0"

__all__ = [
    "CONDITION_FALLBACK",
    "ConstantSigma",
    "DataError",
    "DatasetNotFoundError",
    "DatasetRecord",
    "DegenerateDataError",
    "DenseSystem",
    "DistanceStats",
    "FitReport",
    "FormatError",
    "FreeSpaceModel",
    "GoodnessOfFit",
    "InsufficientDataError",
    "LineFit",
    "LinkConstants",
    "LinkPlan",
    "LocalizationEstimate",
    "NumericalError",
    "PolynomialFit",
    "PrrCorrelations",
    "PublishedFit",
    "RssiSurvey",
    "RssifitError",
    "ShadowedPathLossModel",
    "SigmaFitReport",
    "SigmaPolynomial",
    "SigmaValue",
    "SimulationSpec",
    "SingularMatrixError",
    "SolveDiagnostics",
    "SurveyStats",
    "TwoRayModel",
    "confidence_interval",
    "dataset_names",
    "embedded_dataset",
    "estimate_distance",
    "fit_path_loss",
    "fit_sigma_polynomial",
    "free_space_rx",
    "goodness_of_fit",
    "load_stats_csv",
    "load_survey_csv",
    "max_range",
    "model_from_json",
    "model_to_json",
    "ols_line",
    "orthogonal_solve",
    "path_loss_db",
    "polyfit_quartic",
    "polyval",
    "predict_mean_rss",
    "prr_correlations",
    "published_fit",
    "residual_y",
    "rss_from_path_loss",
    "save_stats_csv",
    "save_survey_csv",
    "shadow_pdf",
    "sigma_at",
    "simulate_survey",
    "solve_dense",
    "standard_normals",
    "stationarity_sums",
    "survey_stats",
]
