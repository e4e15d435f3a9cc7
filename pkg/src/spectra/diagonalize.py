from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
import scipy.sparse.linalg as spla
from scipy.sparse.csgraph import connected_components

from ..automaton import boundary_digits
from ..config import Config
from ..errors import SubspaceLeakageError
from .operators import basis_index

# eigenpairs requested from the iterative solver on oversized blocks
ITERATIVE_EIGENPAIRS = 6


def block_decompose(op):
    """Basis indices of each connected block of the operator's sparsity graph, sorted"""
    pattern = (abs(op.matrix) + abs(op.matrix.T)).tocsr()
    pattern.data[pattern.data < Config.HERMITIAN_TOL] = 0
    pattern.eliminate_zeros()
    count, labels = connected_components(pattern, directed=False)
    blocks = [np.flatnonzero(labels == label) for label in range(count)]
    return sorted(blocks, key=lambda block: int(block[0]))


@dataclass
class BlockSolution:
    block: np.ndarray
    values: np.ndarray
    vectors: np.ndarray
    full: bool  # False when only the lowest eigenpairs were computed


def _solve_block(op, block):
    sub = op.matrix[block][:, block]
    dim = len(block)
    if dim <= Config.DENSE_EIGH_MAX_DIM:
        values, vectors = np.linalg.eigh(sub.toarray())
        return BlockSolution(block, values, vectors, True)
    # fixed start vector keeps reports reproducible
    start = np.random.default_rng(dim).standard_normal(dim)
    values, vectors = spla.eigsh(sub.tocsr(), k=min(ITERATIVE_EIGENPAIRS, dim - 2), which="SA", v0=start)
    order = np.argsort(values)
    return BlockSolution(block, values[order], vectors[:, order], False)


def solve_blocks(op, workers=1):
    """Eigenpairs of every block; blocks above Config.DENSE_EIGH_MAX_DIM keep only the lowest few"""
    blocks = block_decompose(op)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        return list(pool.map(lambda block: _solve_block(op, block), blocks))


def group_eigenvalues(values, tol=Config.SPECTRAL_TOL):
    """Sorted [(value, multiplicity)] merging eigenvalues closer than tol"""
    grouped = []
    for v in np.sort(np.real(values)):
        if grouped and abs(v - grouped[-1][0]) < tol:
            grouped[-1][1] += 1
        else:
            grouped.append([float(v), 1])
    return [(round(v, 9) + 0.0, m) for v, m in grouped]


@dataclass
class Spectrum:
    eigenvalues: list  # [(value, multiplicity)]
    blocks: int
    complete: bool

    def as_dict(self):
        return {
            "eigenvalues": [{"value": v, "multiplicity": m} for v, m in self.eigenvalues],
            "blocks": self.blocks,
            "complete": self.complete,
        }


def spectrum(op, workers=1, tol=Config.SPECTRAL_TOL, solved=None):
    """Eigenvalues block by block; complete=False when a block went to the iterative solver"""
    solved = solve_blocks(op, workers) if solved is None else solved
    values = np.concatenate([s.values for s in solved])
    return Spectrum(group_eigenvalues(values, tol), len(solved), all(s.full for s in solved))


@dataclass
class GroundSpace:
    energy: float
    vectors: list
    gap: object  # float, or None when nothing lies above the ground level

    @property
    def degeneracy(self):
        return len(self.vectors)

    @property
    def gapped(self):
        return self.gap is not None and self.gap > Config.GAP_TOL

    def as_dict(self):
        return {
            "energy": round(self.energy, 9) + 0.0,
            "degeneracy": self.degeneracy,
            "gap": None if self.gap is None else round(self.gap, 9),
        }


def ground_space(h, degeneracy_tol=Config.GAP_TOL, workers=1, solved=None):
    """Orthonormal basis of the lowest eigenspace, each vector living in one block.

    Oversized blocks are solved iteratively for their lowest ITERATIVE_EIGENPAIRS
    eigenpairs, so a block may contribute at most that many ground vectors.
    """
    if not h.is_hermitian():
        raise ValueError("ground_space needs a Hermitian operator")
    solved = solve_blocks(h, workers) if solved is None else solved
    energy = min(float(s.values[0]) for s in solved)

    vectors, above = [], []
    for s in solved:
        for j, v in enumerate(s.values):
            if v - energy < degeneracy_tol:
                full = np.zeros(h.dim, dtype=np.complex128)
                full[s.block] = s.vectors[:, j]
                vectors.append(full)
            else:
                above.append(float(v))
    gap = min(above) - energy if above else None
    return GroundSpace(energy, vectors, gap)


def perron_signature(vector, tol=Config.SPECTRAL_TOL):
    """Amplitudes on the support share one phase and one magnitude"""
    vec = np.asarray(vector, dtype=np.complex128)
    support = np.abs(vec) > tol
    if not support.any():
        return False
    pivot = vec[np.argmax(np.abs(vec))]
    aligned = vec[support] / (pivot / abs(pivot))
    return bool(
        np.all(np.abs(aligned.imag) < tol)
        and np.all(aligned.real > 0)
        and np.ptp(aligned.real) < tol
    )


def sector_basis(code, sector):
    """Sector-S boundaries (lexicographic) and the basis indices of their codewords"""
    digits = boundary_digits(0, code.size, code.n)
    boundaries = digits[digits.sum(axis=1) % 3 == sector % 3]
    return boundaries, basis_index(code.codewords_for(boundaries))


@dataclass
class SectorSpectrum:
    sector: int
    boundaries: np.ndarray
    matrix: np.ndarray
    eigenvalues: list
    ground_vector: np.ndarray
    leakage: float

    def as_dict(self):
        return {
            "sector": self.sector,
            "dimension": len(self.boundaries),
            "eigenvalues": [{"value": v, "multiplicity": m} for v, m in self.eigenvalues],
            "leakage": self.leakage,
        }


def sector_spectrum(hx, sector, code, tol=Config.SPECTRAL_TOL):
    """hx restricted to the sector codeword states; raises when hx leaves that span"""
    boundaries, indices = sector_basis(code, sector)
    columns = hx.matrix[:, indices].toarray()
    inside = columns[indices, :]
    leakage = float(np.linalg.norm(columns) ** 2 - np.linalg.norm(inside) ** 2)
    leakage = float(np.sqrt(max(leakage, 0.0)))
    if leakage > tol:
        raise SubspaceLeakageError(leakage)
    values, vectors = np.linalg.eigh(inside)
    ground = vectors[:, 0]
    pivot = ground[np.argmax(np.abs(ground))]
    ground = ground / (pivot / abs(pivot))
    return SectorSpectrum(sector % 3, boundaries, inside, group_eigenvalues(values, tol), ground, leakage)
