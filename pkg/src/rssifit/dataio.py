"""CSV codecs for surveys and statistics, and the JSON model document.

All formats are UTF-8 with LF newlines. Numeric fields are rendered with
Python's shortest-round-trip float representation (integers without a
decimal point), so saving and reloading reproduces values bit for bit and
repeated exports are byte-stable.

Survey CSV  header ``site,distance_m,rssi_dbm``, one sample per row. A file
            holds one site. Loading pools rows by distance in order of first
            appearance, so a survey whose distances are distinct round-trips
            exactly; one with repeated distance rows reloads in the pooled
            form.

Stats CSV   header ``distance_m,mean_dbm,sd_db,prr_pct,n``, one distance per
            row, mirroring the embedded survey tables. ``prr_pct`` may be
            empty (absent). The site label is not part of the format; supply
            it on load.

Model JSON  strict versioned document (``format_version`` 1). Unknown fields
            are rejected with their path rather than ignored: a misspelled
            field that silently defaulted would corrupt a calibration.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Sequence

from .errors import DataError, FormatError
from .models import ConstantSigma, ShadowedPathLossModel, SigmaPolynomial
from .surveys import DistanceStats, RssiSurvey, SurveyStats

SURVEY_HEADER = ("site", "distance_m", "rssi_dbm")
STATS_HEADER = ("distance_m", "mean_dbm", "sd_db", "prr_pct", "n")
MODEL_FORMAT_VERSION = 1


def _fmt(value: float) -> str:
    """Shortest decimal that reloads to the same float; ints undotted."""
    if value == int(value):
        return str(int(value))
    return repr(value)


def _parse_float(text: str, line: int, column: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise FormatError(
            f"line {line}, column {column!r}: not a number: {text!r}"
        ) from None
    if not math.isfinite(value):
        raise FormatError(
            f"line {line}, column {column!r}: value must be finite, "
            f"got {text!r}"
        )
    return value


def _parse_int(text: str, line: int, column: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise FormatError(
            f"line {line}, column {column!r}: not an integer: {text!r}"
        ) from None


def _check_header(row: list[str] | None, expected: tuple[str, ...]) -> None:
    if row is None:
        raise FormatError(f"line 1: empty file, expected header "
                          f"{','.join(expected)!r}")
    if tuple(row) != expected:
        raise FormatError(
            f"line 1: bad header {','.join(row)!r}, "
            f"expected {','.join(expected)!r}"
        )


def _check_width(row: list[str], line: int, expected: int) -> None:
    if len(row) != expected:
        raise FormatError(
            f"line {line}: expected {expected} fields, got {len(row)}"
        )


def save_survey_csv(survey: RssiSurvey) -> bytes:
    """Serialize a raw survey, one sample per row."""
    if "\n" in survey.site or "\r" in survey.site:
        raise DataError("site must not contain line breaks")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SURVEY_HEADER)
    for distance, samples in survey.rows:
        for sample in samples:
            writer.writerow((survey.site, _fmt(distance), _fmt(sample)))
    return buf.getvalue().encode("utf-8")


def load_survey_csv(data: bytes) -> RssiSurvey:
    """Parse a survey file; pools repeated distances by first appearance."""
    reader = csv.reader(io.StringIO(data.decode("utf-8")))
    _check_header(next(reader, None), SURVEY_HEADER)
    site = None
    pooled: dict[float, list[float]] = {}
    for row in reader:
        line = reader.line_num
        if not row:
            raise FormatError(f"line {line}: blank line")
        _check_width(row, line, 3)
        row_site, d_text, rssi_text = row
        if site is None:
            site = row_site
        elif row_site != site:
            raise FormatError(
                f"line {line}: site {row_site!r} differs from {site!r}; "
                "a survey file holds one site"
            )
        distance = _parse_float(d_text, line, "distance_m")
        if distance <= 0:
            raise FormatError(
                f"line {line}, column 'distance_m': must be > 0, "
                f"got {d_text!r}"
            )
        rssi = _parse_float(rssi_text, line, "rssi_dbm")
        pooled.setdefault(distance, []).append(rssi)
    if site is None:
        raise FormatError("line 2: no data rows")
    return RssiSurvey(
        site=site,
        rows=tuple((d, tuple(samples)) for d, samples in pooled.items()),
    )


def _stats_rows(stats: SurveyStats | Sequence[DistanceStats]):
    if isinstance(stats, SurveyStats):
        return stats.rows
    return tuple(stats)


def save_stats_csv(stats: SurveyStats | Sequence[DistanceStats]) -> bytes:
    """Serialize per-distance statistics, one distance per row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(STATS_HEADER)
    for row in _stats_rows(stats):
        writer.writerow(
            (
                _fmt(row.distance),
                _fmt(row.mean_rss),
                _fmt(row.sd),
                "" if row.prr is None else _fmt(row.prr),
                str(row.n),
            )
        )
    return buf.getvalue().encode("utf-8")


def load_stats_csv(data: bytes, site: str = "stats") -> SurveyStats:
    """Parse a statistics file into per-distance summaries."""
    reader = csv.reader(io.StringIO(data.decode("utf-8")))
    _check_header(next(reader, None), STATS_HEADER)
    rows = []
    for row in reader:
        line = reader.line_num
        if not row:
            raise FormatError(f"line {line}: blank line")
        _check_width(row, line, 5)
        d_text, mean_text, sd_text, prr_text, n_text = row
        try:
            rows.append(
                DistanceStats(
                    distance=_parse_float(d_text, line, "distance_m"),
                    mean_rss=_parse_float(mean_text, line, "mean_dbm"),
                    sd=_parse_float(sd_text, line, "sd_db"),
                    n=_parse_int(n_text, line, "n"),
                    prr=(
                        None
                        if prr_text == ""
                        else _parse_float(prr_text, line, "prr_pct")
                    ),
                )
            )
        except FormatError:
            raise
        except DataError as exc:
            raise FormatError(f"line {line}: {exc}") from None
    if not rows:
        raise FormatError("line 2: no data rows")
    return SurveyStats(site=site, rows=tuple(rows))


def _reject_unknown(obj: dict, allowed: tuple[str, ...], path: str) -> None:
    for key in obj:
        if key not in allowed:
            where = f"{path}.{key}" if path else key
            raise FormatError(f"unknown field {where!r}")


def _take_number(obj: dict, key: str, path: str) -> float:
    where = f"{path}.{key}" if path else key
    if key not in obj:
        raise FormatError(f"missing field {where!r}")
    value = obj[key]
    # bool is an int subclass; a JSON true is not a number here.
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FormatError(f"field {where!r} must be a number, got {value!r}")
    return float(value)


def model_to_json(model: ShadowedPathLossModel) -> bytes:
    """Serialize a model to the versioned JSON document."""
    sigma: object
    if model.sigma is None:
        sigma = None
    elif isinstance(model.sigma, ConstantSigma):
        sigma = {"constant_db": model.sigma.value}
    else:
        sigma = {
            "a": model.sigma.a,
            "b": model.sigma.b,
            "c": model.sigma.c,
            "e": model.sigma.e,
            "f": model.sigma.f,
            "d_min_m": model.sigma.d_min,
            "d_max_m": model.sigma.d_max,
        }
    doc = {
        "format_version": MODEL_FORMAT_VERSION,
        "d0_m": model.d0,
        "rss_d0_dbm": model.rss_d0,
        "eta": model.eta,
        "sigma": sigma,
    }
    return (json.dumps(doc, indent=2) + "\n").encode("utf-8")


def model_from_json(data: bytes) -> ShadowedPathLossModel:
    """Parse and validate a model document; unknown fields are errors."""
    try:
        doc = json.loads(data.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise FormatError(f"not a valid JSON document: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("document root must be a JSON object")
    _reject_unknown(
        doc, ("format_version", "d0_m", "rss_d0_dbm", "eta", "sigma"), ""
    )
    if "format_version" not in doc:
        raise FormatError("missing field 'format_version'")
    version = doc["format_version"]
    if version != MODEL_FORMAT_VERSION:
        raise FormatError(
            f"unsupported format_version {version!r}; "
            f"this reader understands {MODEL_FORMAT_VERSION}"
        )
    if "sigma" not in doc:
        raise FormatError("missing field 'sigma' (may be null)")
    raw_sigma = doc["sigma"]
    sigma: ConstantSigma | SigmaPolynomial | None
    if raw_sigma is None:
        sigma = None
    elif isinstance(raw_sigma, dict):
        if "constant_db" in raw_sigma:
            _reject_unknown(raw_sigma, ("constant_db",), "sigma")
            sigma = ConstantSigma(_take_number(raw_sigma, "constant_db", "sigma"))
        else:
            _reject_unknown(
                raw_sigma,
                ("a", "b", "c", "e", "f", "d_min_m", "d_max_m"),
                "sigma",
            )
            sigma = SigmaPolynomial(
                a=_take_number(raw_sigma, "a", "sigma"),
                b=_take_number(raw_sigma, "b", "sigma"),
                c=_take_number(raw_sigma, "c", "sigma"),
                e=_take_number(raw_sigma, "e", "sigma"),
                f=_take_number(raw_sigma, "f", "sigma"),
                d_min=_take_number(raw_sigma, "d_min_m", "sigma"),
                d_max=_take_number(raw_sigma, "d_max_m", "sigma"),
            )
    else:
        raise FormatError(
            "field 'sigma' must be an object or null, "
            f"got {type(raw_sigma).__name__}"
        )
    return ShadowedPathLossModel(
        d0=_take_number(doc, "d0_m", ""),
        rss_d0=_take_number(doc, "rss_d0_dbm", ""),
        eta=_take_number(doc, "eta", ""),
        sigma=sigma,
    )
