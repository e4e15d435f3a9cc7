from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from ..automaton import HCode
from ..config import Config
from ..errors import EnumerationLimitError
from ..gf3 import GF3Matrix, rank


@dataclass(frozen=True)
class EntropyResult:
    """Entropy of a region in base-3 units"""

    region: object
    entropy: float
    method: str
    note: str = ""

    def as_dict(self):
        out = {"region_sites": self.region.ordered, "entropy": self.entropy, "method": self.method}
        if self.note:
            out["note"] = self.note
        return out


def _generator(lattice, code, sector):
    code = code or HCode.build(lattice)
    if sector is None:
        return code.generator.array
    # a sector state is a translate of the sum-zero subcode; same entropies
    return code.sector_generator().array


def column_rank(generator, sites):
    sites = sorted(sites)
    if not sites:
        return 0
    return rank(GF3Matrix(generator[:, sites]))


def entropy(region, lattice, sector=None, code=None):
    """S_A = rank(G_A) + rank(G_complement) - dim, i.e. k - dim C_A - dim C_complement"""
    if not len(region):
        return EntropyResult(region, 0, "rank", note="empty region")
    gen = _generator(lattice, code, sector)
    # generator rows are independent
    dim = gen.shape[0]
    inside = column_rank(gen, region.sites)
    outside = column_rank(gen, region.complement().sites)
    return EntropyResult(region, int(inside + outside - dim), "rank")


def rank_entropy(region, lattice, code=None):
    return entropy(region, lattice, code=code).entropy


def von_neumann_base3(eigenvalues):
    vals = np.clip(np.real(eigenvalues), 0.0, None)
    vals = vals[vals > 1e-15]
    return float(-np.sum(vals * np.log(vals)) / np.log(3.0))


def brute_force_entropy(region, lattice, code=None):
    """Entropy from the explicit uniform superposition over all 3^n codewords"""
    code = code or HCode.build(lattice)
    if code.n > Config.BRUTE_FORCE_MAX_N:
        raise EnumerationLimitError("n", code.n, Config.BRUTE_FORCE_MAX_N, "use the rank-based entropy")
    inside = region.ordered
    outside = region.complement().ordered
    small, large = (inside, outside) if len(inside) <= len(outside) else (outside, inside)
    if len(small) > Config.BRUTE_FORCE_MAX_SIDE:
        raise EnumerationLimitError(
            "bipartition side", len(small), Config.BRUTE_FORCE_MAX_SIDE, "use the rank-based entropy"
        )
    if not small:
        return EntropyResult(region, 0.0, "brute-force", note="empty side")

    words = code.all_codewords()
    _, row_index = np.unique(words[:, small], axis=0, return_inverse=True)
    _, col_index = np.unique(words[:, large], axis=0, return_inverse=True)
    row_index = row_index.reshape(-1)
    col_index = col_index.reshape(-1)
    amplitude = np.full(len(words), 1.0 / np.sqrt(len(words)))
    psi = sp.csr_matrix((amplitude, (row_index, col_index)))
    rho = (psi @ psi.T).toarray()
    return EntropyResult(region, von_neumann_base3(np.linalg.eigvalsh(rho)), "brute-force")


def topological_entropy(a, b, c, lattice, code=None):
    """S_ABC - S_AB - S_AC - S_BC + S_A + S_B + S_C with the rank-based entropy"""
    if not (a.disjoint(b) and a.disjoint(c) and b.disjoint(c)):
        raise ValueError("regions A, B, C must be pairwise disjoint")
    code = code or HCode.build(lattice)

    def s(*parts):
        return rank_entropy(parts[0].union(*parts[1:]), lattice, code)

    return s(a, b, c) - s(a, b) - s(a, c) - s(b, c) + s(a) + s(b) + s(c)
