"""
Admissibility module for hcode-verify

Decides which tori admit H-codes through powers of the GF(3) transfer matrix.
"""

from .transfer import (
    PeriodEntry,
    TransferMatrix,
    admissibility_csv,
    is_admissible,
    minimal_period,
    quoted_pairs_report,
    search_admissible,
    shift_matrix,
    transfer_matrix,
    verify_power_of_three_argument,
)

__all__ = [
    "PeriodEntry",
    "TransferMatrix",
    "admissibility_csv",
    "is_admissible",
    "minimal_period",
    "quoted_pairs_report",
    "search_admissible",
    "shift_matrix",
    "transfer_matrix",
    "verify_power_of_three_argument",
]
