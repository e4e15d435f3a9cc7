"""
GF(3) module for hcode-verify

Exact trit arithmetic and linear algebra over the field with three elements.
"""

from .matrix import (
    GF3,
    GF3Matrix,
    binomial_mod3,
    determinant,
    kernel_basis,
    lift_signed,
    mat_mul,
    mat_pow,
    multiplicative_order,
    rank,
    row_reduce,
    to_trit,
    to_trits,
)

__all__ = [
    "GF3",
    "GF3Matrix",
    "binomial_mod3",
    "determinant",
    "kernel_basis",
    "lift_signed",
    "mat_mul",
    "mat_pow",
    "multiplicative_order",
    "rank",
    "row_reduce",
    "to_trit",
    "to_trits",
]
