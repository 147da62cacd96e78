"""Truncated power series and the generating-function oracle."""
from .oracle import generating_quotient, sequence_by_gf
from .series import (
    SeriesKind,
    TruncSeries,
    egf_extract,
    elementary_series,
    polylog_of,
    series_div,
    series_mul,
)

__all__ = [
    "SeriesKind",
    "TruncSeries",
    "egf_extract",
    "elementary_series",
    "generating_quotient",
    "polylog_of",
    "sequence_by_gf",
    "series_div",
    "series_mul",
]
