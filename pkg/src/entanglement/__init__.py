"""
Entanglement module for hcode-verify

Exact rank-based region entropies of the uniform H-code superposition, a brute-force
density-matrix cross-check, topological entropy and region growth.
"""

from .entropy import (
    EntropyResult,
    brute_force_entropy,
    entropy,
    rank_entropy,
    topological_entropy,
    von_neumann_base3,
)
from .regions import (
    GrowthPath,
    all_regions,
    area_law_check,
    entropy_table,
    growth_path,
    line_regions,
    maximally_mixed_census,
    random_disjoint_triples,
    random_regions,
    strong_subadditivity,
    triangle_regions,
)

__all__ = [
    "EntropyResult",
    "GrowthPath",
    "all_regions",
    "area_law_check",
    "brute_force_entropy",
    "entropy",
    "entropy_table",
    "growth_path",
    "line_regions",
    "maximally_mixed_census",
    "random_disjoint_triples",
    "random_regions",
    "rank_entropy",
    "strong_subadditivity",
    "topological_entropy",
    "triangle_regions",
    "von_neumann_base3",
]
