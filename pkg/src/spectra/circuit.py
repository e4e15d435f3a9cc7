import numpy as np

from ..automaton import HCode, boundary_digits
from ..config import Config
from ..errors import EnumerationLimitError
from ..lattice import TorusLattice
from .diagonalize import ground_space
from .hamiltonians import build_H_boundary
from .operators import basis_digits, basis_index, check_sites

PREPARE_MAX_N = 3


def hcode_state(lattice, sector=None, code=None):
    """Uniform superposition over all codewords, or over one charge sector"""
    check_sites(lattice.num_sites)
    code = code or HCode.build(lattice)
    boundaries = boundary_digits(0, code.size, code.n)
    if sector is not None:
        boundaries = boundaries[boundaries.sum(axis=1) % 3 == sector % 3]
    state = np.zeros(3**lattice.num_sites, dtype=np.complex128)
    state[basis_index(code.codewords_for(boundaries))] = 1.0
    return state / np.linalg.norm(state)


def boundary_input(n, mode="uniform", sector=None, boundary=None):
    """Boundary register amplitudes: uniform, sector-projected or a single basis state"""
    dim = 3**n
    if mode == "uniform":
        return np.full(dim, 1.0 / np.sqrt(dim), dtype=np.complex128)
    if mode == "sector":
        if sector is None:
            raise ValueError("sector input needs a sector")
        keep = boundary_digits(0, dim, n).sum(axis=1) % 3 == sector % 3
        vec = keep.astype(np.complex128)
        return vec / np.linalg.norm(vec)
    if mode == "basis":
        if boundary is None or len(boundary) != n:
            raise ValueError(f"basis input needs {n} boundary trits")
        vec = np.zeros(dim, dtype=np.complex128)
        vec[int(basis_index(np.asarray(boundary) % 3))] = 1.0
        return vec
    raise ValueError(f"unknown boundary input {mode!r}")


def boundary_ground_state(n, sector, periodic=True):
    """Ground vector of the boundary Hamiltonian supported on sector S"""
    ground = ground_space(build_H_boundary(n, periodic))
    sums = basis_digits(n).astype(np.int64).sum(axis=1) % 3
    for vec in ground.vectors:
        support = np.abs(vec) > Config.STATE_TOL
        if np.all(sums[support] == sector % 3):
            pivot = vec[np.argmax(np.abs(vec))]
            return vec / (pivot / abs(pivot))
    raise ValueError(f"no ground vector of the boundary Hamiltonian lies in sector {sector}")


def apply_neutralization_gate(state, a, b, target, num_sites):
    """|s_a, s_b, t> -> |s_a, s_b, t - s_a - s_b>; a basis permutation"""
    digits = basis_digits(num_sites).astype(np.int64).copy()
    digits[:, target] = (digits[:, target] - digits[:, a] - digits[:, b]) % 3
    out = np.zeros_like(state)
    out[basis_index(digits)] = state
    return out


def prepare_state(n=3, boundary_state=None, lattice=None):
    """Boundary register on row 0, bulk ancillas in |0>, gates applied row by row"""
    if n > PREPARE_MAX_N:
        raise EnumerationLimitError("n", n, PREPARE_MAX_N, "the circuit is simulated on 9 qutrits")
    lattice = lattice or TorusLattice(n, n)
    check_sites(lattice.num_sites)
    boundary_state = boundary_input(n) if boundary_state is None else np.asarray(boundary_state)
    if boundary_state.shape != (3**n,):
        raise ValueError(f"boundary state must have {3**n} amplitudes")

    bulk = 3 ** (lattice.num_sites - n)
    ancilla = np.zeros(bulk, dtype=np.complex128)
    ancilla[0] = 1.0
    state = np.kron(boundary_state, ancilla)  # row 0 holds the most significant trits
    for r in range(1, lattice.m):
        for c in range(n):
            a, b = lattice.site(r - 1, c), lattice.site(r - 1, c + 1)
            state = apply_neutralization_gate(state, a, b, lattice.site(r, c), lattice.num_sites)
    return state


def overlap(a, b):
    return float(abs(np.vdot(a, b)))
