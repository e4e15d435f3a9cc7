from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from ..errors import InadmissibleTorusError
from ..gf3 import GF3Matrix, to_trits
from ..lattice import PatchLattice, TorusLattice


def neutral(triple):
    """Neutralization rule on one triangle: s_i + s_j + s_k = 0 (mod 3)"""
    return sum(int(v) for v in triple) % 3 == 0


def _as_row(row):
    arr = np.asarray(row, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError("a row must be one-dimensional")
    return to_trits(arr).astype(np.int64)


def propagate_row(row, periodic=True):
    """One automaton step: out_i = -(row_i + row_{i+1}); open rows lose their last entry"""
    row = _as_row(row)
    if row.size < 2:
        raise ValueError(f"row length must be at least 2, got {row.size}")
    if periodic:
        out = -(row + np.roll(row, -1))
    else:
        out = -(row[:-1] + row[1:])
    return (out % 3).astype(np.int8)


def push_operator_string(exponents):
    """Commute X^{n_1} ... X^{n_N} through one automaton layer"""
    exps = np.asarray(exponents, dtype=np.int64) % 3
    return ((-(exps + np.roll(exps, -1))) % 3).astype(np.int8)


def push_operator_through(exponents, layers):
    """Exponent configuration of the bulk operator induced by a boundary X-string"""
    current = np.asarray(exponents, dtype=np.int64) % 3
    out = [current.astype(np.int8)]
    for _ in range(layers - 1):
        current = push_operator_string(current).astype(np.int64)
        out.append(current.astype(np.int8))
    return np.concatenate(out)


@dataclass(frozen=True, eq=False)
class SpinConfig:
    """Trit per site of a lattice, row-major"""

    lattice: object
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.int8) % 3
        if values.shape != (self.lattice.num_sites,):
            raise ValueError(
                f"configuration of {values.shape} trits does not fit {self.lattice.num_sites} sites"
            )
        values = values.astype(np.int8)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __eq__(self, other):
        if not isinstance(other, SpinConfig):
            return NotImplemented
        return self.lattice == other.lattice and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash((self.lattice, self.values.tobytes()))

    def row(self, r):
        return self.values[self.lattice.row_sites(r)]

    def rows(self):
        return [self.row(r) for r in range(self.lattice.m)]

    def is_valid(self):
        return all(neutral(self.values[list(tri)]) for tri in self.lattice.up_triangles())

    def frustrated_triangles(self):
        return [tri for tri in self.lattice.up_triangles() if not neutral(self.values[list(tri)])]

    def __sub__(self, other):
        if self.lattice != other.lattice:
            raise ValueError("configurations live on different lattices")
        return SpinConfig(self.lattice, (self.values.astype(np.int64) - other.values) % 3)

    def __add__(self, other):
        if self.lattice != other.lattice:
            raise ValueError("configurations live on different lattices")
        return SpinConfig(self.lattice, (self.values.astype(np.int64) + other.values) % 3)


def _check_boundary(boundary, lattice):
    arr = to_trits(boundary).astype(np.int64)
    if arr.size != lattice.n:
        raise ValueError(f"boundary of length {arr.size} does not match n={lattice.n}")
    return arr


def generate_codeword(boundary, lattice):
    """Full configuration grown from the boundary row by the neutralization rule"""
    row = _check_boundary(boundary, lattice)
    periodic = isinstance(lattice, TorusLattice)
    rows = [row]
    for _ in range(lattice.m - 1):
        rows.append(propagate_row(rows[-1], periodic=periodic).astype(np.int64))
    if periodic:
        closure = propagate_row(rows[-1])
        if not np.array_equal(closure, row):
            raise InadmissibleTorusError(lattice.n, lattice.m, row, closure)
    return SpinConfig(lattice, np.concatenate(rows))


def generator_matrix(lattice):
    """n x (sites) matrix whose i-th row is the codeword of e_i"""
    rows = [generate_codeword(np.eye(lattice.n, dtype=np.int64)[i], lattice).values for i in range(lattice.n)]
    return GF3Matrix(np.vstack(rows))


def boundary_digits(start, stop, n):
    """Boundaries with lexicographic indices [start, stop); site 0 most significant"""
    idx = np.arange(start, stop, dtype=np.int64)
    powers = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((idx[:, None] // powers[None, :]) % 3).astype(np.int64)


@dataclass(frozen=True)
class HCode:
    """Linear code spanned by the generator rows; 3^n codewords"""

    lattice: object
    generator: GF3Matrix = field(compare=False)

    @classmethod
    def build(cls, lattice):
        return cls(lattice, generator_matrix(lattice))

    @property
    def n(self):
        return self.lattice.n

    @property
    def size(self):
        return 3**self.n

    @cached_property
    def _g(self):
        return self.generator.array

    def codeword(self, boundary):
        row = _check_boundary(boundary, self.lattice)
        return SpinConfig(self.lattice, (row @ self._g) % 3)

    def codewords_for(self, boundaries):
        """Codeword array for a (k, n) batch of boundaries"""
        return ((np.asarray(boundaries, dtype=np.int64) @ self._g) % 3).astype(np.int8)

    def chunks(self, chunk_size):
        """(start, stop) index ranges covering all 3^n boundaries"""
        return [(start, min(start + chunk_size, self.size)) for start in range(0, self.size, chunk_size)]

    def codeword_chunk(self, start, stop):
        return self.codewords_for(boundary_digits(start, stop, self.n))

    def enumerate_codewords(self, chunk_size=2187):
        for start, stop in self.chunks(chunk_size):
            yield start, self.codeword_chunk(start, stop)

    def all_codewords(self):
        return self.codeword_chunk(0, self.size)

    def sector_generator(self):
        """Generator of the sum-zero subcode (boundaries with s_1 + ... + s_n = 0)"""
        n = self.n
        basis = np.zeros((n - 1, n), dtype=np.int64)
        for i in range(n - 1):
            basis[i, i] = 1
            basis[i, i + 1] = 2
        return GF3Matrix((basis @ self._g) % 3)


def light_cone_diff(boundary, site, delta, lattice):
    """Sites whose value changes when boundary[site] is shifted by delta"""
    delta = int(delta) % 3
    if delta == 0:
        raise ValueError("delta must be 1 or 2")
    base = _check_boundary(boundary, lattice)
    if not 0 <= site < lattice.n:
        raise ValueError(f"boundary index {site} outside [0, {lattice.n})")
    moved = base.copy()
    moved[site] = (moved[site] + delta) % 3
    diff = generate_codeword(moved, lattice) - generate_codeword(base, lattice)
    return lattice.region(np.flatnonzero(diff.values))


def make_lattice(kind, n, m):
    if kind == "torus":
        return TorusLattice(n, m)
    if kind == "patch":
        return PatchLattice(n, m)
    raise ValueError(f"unknown lattice type {kind!r}")
