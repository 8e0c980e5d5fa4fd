"""Exact and asymptotic analysis of admissible random walks and bidirectional ballot sequences."""

from ballotwalk.walks_exact import (
    HeightSpectrum,
    Path,
    WalkDomain,
    WeightedPath,
    ballot_count,
    enumerate_admissible,
    exact_shifted_moment,
    exact_total,
    extremal_count,
    height_spectrum_dp,
)

__version__ = "0.1.0"

__all__ = [
    "HeightSpectrum",
    "Path",
    "WalkDomain",
    "WeightedPath",
    "ballot_count",
    "enumerate_admissible",
    "exact_shifted_moment",
    "exact_total",
    "extremal_count",
    "height_spectrum_dp",
]
