"""
Lattice module for hcode-verify

Triangular-lattice geometry: tori and planar patches, up-triangles, cycles and regions.
"""

from .geometry import (
    PatchLattice,
    Region,
    TorusLattice,
    cycles,
    grow_region,
    parse_region,
    up_triangles,
)

__all__ = [
    "PatchLattice",
    "Region",
    "TorusLattice",
    "cycles",
    "grow_region",
    "parse_region",
    "up_triangles",
]
