"""
hcode-verify Package

Exact verification of ternary holographic codes on triangular lattices: GF(3)
transfer matrices, codeword enumeration, distances, entanglement and parent
Hamiltonian spectra.
"""

__version__ = "1.0.0"
__author__ = "hcode-verify"

from .core import VerificationClient
from .config import Config

__all__ = ["VerificationClient", "Config"]
