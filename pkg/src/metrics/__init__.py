"""
Metrics module for hcode-verify

Hamming weights and distances, exhaustive minimum distance, cycle charges and sectors.
"""

from .distance import (
    DistanceResult,
    charge_constancy,
    charge_label,
    charge_phase,
    charge_report,
    charges_of,
    cycle_charge,
    hamming_distance,
    hamming_weight,
    min_distance,
    pairwise_min_distance,
    sampled_min_distance,
    sector_census,
)

__all__ = [
    "DistanceResult",
    "charge_constancy",
    "charge_label",
    "charge_phase",
    "charge_report",
    "charges_of",
    "cycle_charge",
    "hamming_distance",
    "hamming_weight",
    "min_distance",
    "pairwise_min_distance",
    "sampled_min_distance",
    "sector_census",
]
