"""
Spectra module for hcode-verify

Generalized Pauli operators on qutrit lattices, the parent and boundary Hamiltonians,
block diagonalization, the triangle constraint solver and the preparation circuit.
"""

from .circuit import (
    apply_neutralization_gate,
    boundary_ground_state,
    boundary_input,
    hcode_state,
    overlap,
    prepare_state,
)
from .constraints import (
    compare_hx_general_to_hx,
    constraint_matrix,
    hx_exponent_vectors,
    solve_hx_constraints,
    translation_orbits,
)
from .diagonalize import (
    BlockSolution,
    GroundSpace,
    SectorSpectrum,
    Spectrum,
    block_decompose,
    ground_space,
    group_eigenvalues,
    perron_signature,
    sector_basis,
    sector_spectrum,
    solve_blocks,
    spectrum,
)
from .hamiltonians import (
    HX_PRIME_STRINGS,
    HX_STRINGS,
    HX_THIRD_STRING_QUOTED,
    TORUS_3X3,
    build_charge,
    build_H_boundary,
    build_HX_3x3,
    build_HX_general,
    build_HX_prime_3x3,
    build_HZ,
    charge_spec,
    classical_hz_energy,
    hx_prime_terms,
    hx_terms,
    hz_diagonal,
    line_balance,
    string_exponents,
)
from .operators import (
    Q_PHASE,
    X,
    Z,
    LatticeOperator,
    OperatorSpec,
    basis_digits,
    basis_index,
    commutation_phase,
    commutator_norm,
    commutes,
    symbolic_commutes,
)

__all__ = [
    "BlockSolution",
    "GroundSpace",
    "HX_PRIME_STRINGS",
    "HX_STRINGS",
    "HX_THIRD_STRING_QUOTED",
    "LatticeOperator",
    "OperatorSpec",
    "Q_PHASE",
    "SectorSpectrum",
    "Spectrum",
    "TORUS_3X3",
    "X",
    "Z",
    "apply_neutralization_gate",
    "basis_digits",
    "basis_index",
    "block_decompose",
    "boundary_ground_state",
    "boundary_input",
    "build_H_boundary",
    "build_HX_3x3",
    "build_HX_general",
    "build_HX_prime_3x3",
    "build_HZ",
    "build_charge",
    "charge_spec",
    "classical_hz_energy",
    "commutation_phase",
    "commutator_norm",
    "commutes",
    "compare_hx_general_to_hx",
    "constraint_matrix",
    "ground_space",
    "group_eigenvalues",
    "hcode_state",
    "hx_exponent_vectors",
    "hx_prime_terms",
    "hx_terms",
    "hz_diagonal",
    "line_balance",
    "overlap",
    "perron_signature",
    "prepare_state",
    "sector_basis",
    "sector_spectrum",
    "solve_hx_constraints",
    "solve_blocks",
    "spectrum",
    "string_exponents",
    "symbolic_commutes",
    "translation_orbits",
]
