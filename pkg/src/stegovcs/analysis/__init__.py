"""Evaluation reports: histograms, band gap, guess probability."""

from stegovcs.analysis.report import (
    BandGapReport,
    ComparisonRow,
    HistogramReport,
    band_gap_report,
    count_band_encodings,
    guess_probability,
    histogram,
    histogram_csv,
    render_key_values,
    render_text,
)

__all__ = [
    "BandGapReport",
    "ComparisonRow",
    "HistogramReport",
    "band_gap_report",
    "count_band_encodings",
    "guess_probability",
    "histogram",
    "histogram_csv",
    "render_key_values",
    "render_text",
]
