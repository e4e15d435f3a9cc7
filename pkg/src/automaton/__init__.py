"""
Automaton module for hcode-verify

Neutralization-rule cellular automaton: codewords, generator matrix, light cones,
operator pushing and the four-qutrit simplex state.
"""

from .codeword_io import read_codeword, write_codeword
from .rule import (
    HCode,
    SpinConfig,
    boundary_digits,
    generate_codeword,
    generator_matrix,
    light_cone_diff,
    make_lattice,
    neutral,
    propagate_row,
    push_operator_string,
    push_operator_through,
)
from .simplex import reduced_density_matrix, simplex_state, simplex_tensor, verify_ame

__all__ = [
    "HCode",
    "SpinConfig",
    "boundary_digits",
    "generate_codeword",
    "generator_matrix",
    "light_cone_diff",
    "make_lattice",
    "neutral",
    "propagate_row",
    "push_operator_string",
    "push_operator_through",
    "read_codeword",
    "reduced_density_matrix",
    "simplex_state",
    "simplex_tensor",
    "verify_ame",
    "write_codeword",
]
