import itertools

import numpy as np

from ..config import Config
from ..gf3 import GF3Matrix, kernel_basis, lift_signed, rank
from .hamiltonians import (
    HX_PRIME_STRINGS,
    HX_STRINGS,
    HX_THIRD_STRING_QUOTED,
    build_HX_general,
    string_exponents,
)

# kernels up to this dimension are enumerated for translation orbits
ORBIT_MAX_DIM = 6


def constraint_matrix(lattice):
    """(#triangles x #sites) incidence: n_i + n_j + n_k = 0 on every up-triangle"""
    mat = np.zeros((len(lattice.up_triangles()), lattice.num_sites), dtype=np.int64)
    for row, tri in enumerate(lattice.up_triangles()):
        mat[row, list(tri)] = 1
    return mat


def _key(vector):
    return tuple(int(v) for v in np.asarray(vector) % 3)


def _span(basis):
    basis = np.asarray(basis, dtype=np.int64)
    for coeffs in itertools.product(range(3), repeat=len(basis)):
        yield (np.asarray(coeffs, dtype=np.int64) @ basis) % 3


def translation_orbits(vectors, lattice):
    """Orbits of exponent vectors under torus translations, in first-seen order"""
    shifts = [np.asarray(lattice.shift(dr, dc)) for dr, dc in lattice.translations()]
    remaining = {_key(v) for v in vectors}
    orbits = []
    for vec in vectors:
        key = _key(vec)
        if key not in remaining:
            continue
        orbit = set()
        for table in shifts:
            moved = np.zeros(lattice.num_sites, dtype=np.int64)
            moved[table] = np.asarray(key)
            orbit.add(_key(moved))
        orbits.append(sorted(orbit))
        remaining -= orbit
    return orbits


def hx_exponent_vectors(lattice):
    """Exponent vectors of the H_X strings native to this torus"""
    if (lattice.n, lattice.m) == (3, 3):
        return [(n * string_exponents(s)) % 3 for n in (1, -1) for s in HX_STRINGS]
    side = lattice.n
    k = round(np.log(side) / np.log(3))
    if lattice.n != lattice.m or 3**k != side or k > Config.SYMBOLIC_MAX_K:
        return []
    return [term.exponents(lattice.num_sites) for term in build_HX_general(k)]


def solve_hx_constraints(lattice):
    """Rank and kernel of the triangle constraint system with membership checks"""
    mat = constraint_matrix(lattice)
    observed_rank = rank(GF3Matrix(mat))
    basis = kernel_basis(GF3Matrix(mat))
    report = {
        "lattice": lattice.describe(),
        "equations": int(mat.shape[0]),
        "unknowns": int(mat.shape[1]),
        "rank": observed_rank,
        "kernel_dimension": len(basis),
        "kernel_basis": [[int(v) for v in row] for row in basis],
        "quoted_rank": Config.QUOTED_CONSTRAINT_RANK,
        "rank_matches_quoted": observed_rank == Config.QUOTED_CONSTRAINT_RANK,
        "zero_in_kernel": not np.any(mat @ np.zeros(mat.shape[1], dtype=np.int64) % 3),
    }

    hx = hx_exponent_vectors(lattice)
    report["hx_in_kernel"] = bool(hx) and all(not np.any((mat @ v) % 3) for v in hx)

    if (lattice.n, lattice.m) == (3, 3):
        # signed exponents: integer triangle sums in {0, +-3}
        sums = [mat @ lift_signed(n * string_exponents(s)) for n in (1, -1) for s in HX_PRIME_STRINGS]
        report["hx_prime_integer_sums"] = sorted({int(v) for row in sums for v in row})
        report["hx_prime_sums_in_range"] = all(set(row.tolist()) <= {0, 3, -3} for row in sums)
        report["hx_prime_in_kernel"] = all(not np.any(row % 3) for row in sums)
        report["quoted_third_string_in_kernel"] = not np.any((mat @ string_exponents(HX_THIRD_STRING_QUOTED)) % 3)

    if len(basis) <= ORBIT_MAX_DIM:
        elements = list(_span(basis)) if basis else [np.zeros(lattice.num_sites, dtype=np.int64)]
        orbits = translation_orbits(elements, lattice)
        hx_keys = {_key(v) for v in hx}
        report["translation_orbits"] = [len(o) for o in orbits]
        report["shift_invariant"] = [list(o[0]) for o in orbits if len(o) == 1]
        report["hx_closed_under_translation"] = bool(hx_keys) and all(
            set(o) <= hx_keys for o in orbits if set(o) & hx_keys
        )
    return report


def compare_hx_general_to_hx():
    """Term sets of the 3^k torus family at k = 1 and of the explicit 3x3 strings"""
    general = {_key(term.exponents(9)) for term in build_HX_general(1)}
    explicit = {_key((n * string_exponents(s)) % 3) for n in (1, -1) for s in HX_STRINGS}
    return {
        "general_terms": len(general),
        "explicit_terms": len(explicit),
        "same_term_set": general == explicit,
        "only_in_general": sorted(general - explicit),
        "only_in_explicit": sorted(explicit - general),
    }
