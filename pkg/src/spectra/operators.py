from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import scipy.sparse as sp

from ..config import Config
from ..errors import EnumerationLimitError

Q_PHASE = np.exp(2j * np.pi / 3)

# X|s> = |s+1>, Z|s> = q^s |s>
X = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], dtype=np.complex128)
Z = np.diag([1.0, Q_PHASE, Q_PHASE**2]).astype(np.complex128)

GENERATORS = ("X", "Z")


def check_sites(num_sites):
    if num_sites > Config.DENSE_MAX_SITES:
        raise EnumerationLimitError(
            "sites", num_sites, Config.DENSE_MAX_SITES, "restrict to a charge sector on the 3x3 torus"
        )


@lru_cache(maxsize=16)
def basis_digits(num_sites):
    """(3^N, N) trit table of the computational basis; site 0 most significant"""
    idx = np.arange(3**num_sites, dtype=np.int64)
    powers = 3 ** np.arange(num_sites - 1, -1, -1, dtype=np.int64)
    digits = ((idx[:, None] // powers[None, :]) % 3).astype(np.int8)
    digits.setflags(write=False)
    return digits


def basis_index(digits):
    digits = np.asarray(digits, dtype=np.int64)
    powers = 3 ** np.arange(digits.shape[-1] - 1, -1, -1, dtype=np.int64)
    return digits @ powers


@dataclass(frozen=True)
class OperatorSpec:
    """Coefficient times a product of X^e / Z^e factors, written left to right"""

    factors: tuple
    coefficient: complex = 1.0

    def __post_init__(self):
        normalized = []
        for site, gen, exponent in self.factors:
            if gen not in GENERATORS:
                raise ValueError(f"unknown generator {gen!r}")
            if int(site) < 0:
                raise ValueError(f"negative site id {site}")
            exponent = int(exponent) % 3
            if exponent:
                normalized.append((int(site), gen, exponent))
        object.__setattr__(self, "factors", tuple(normalized))

    @classmethod
    def x_string(cls, exponents, coefficient=1.0):
        return cls(tuple((s, "X", e) for s, e in enumerate(exponents)), coefficient)

    @classmethod
    def z_string(cls, exponents, coefficient=1.0):
        return cls(tuple((s, "Z", e) for s, e in enumerate(exponents)), coefficient)

    @property
    def weight(self):
        return len({site for site, _, _ in self.factors})

    def exponents(self, num_sites, generator="X"):
        """Net exponent per site of one generator"""
        out = np.zeros(num_sites, dtype=np.int64)
        for site, gen, e in self.factors:
            if site >= num_sites:
                raise ValueError(f"site {site} outside {num_sites} sites")
            if gen == generator:
                out[site] += e
        return out % 3

    def symplectic(self, num_sites):
        return self.exponents(num_sites, "X"), self.exponents(num_sites, "Z")

    def adjoint(self):
        return OperatorSpec(
            tuple((s, g, -e) for s, g, e in reversed(self.factors)), np.conj(self.coefficient)
        )

    def materialize(self, num_sites):
        return LatticeOperator(num_sites, _monomial(self, num_sites))


def _monomial(spec, num_sites):
    check_sites(num_sites)
    digits = basis_digits(num_sites).astype(np.int64)
    dim = digits.shape[0]
    phase = np.full(dim, complex(spec.coefficient))
    # rightmost factor acts first
    for site, gen, e in reversed(spec.factors):
        if site >= num_sites:
            raise ValueError(f"site {site} outside {num_sites} sites")
        if gen == "X":
            digits[:, site] = (digits[:, site] + e) % 3
        else:
            phase = phase * Q_PHASE ** ((e * digits[:, site]) % 3)
    rows = basis_index(digits)
    return sp.csr_matrix((phase, (rows, np.arange(dim))), shape=(dim, dim))


def commutation_phase(a, b, num_sites):
    """k with A B = q^k B A for generalized Pauli strings (Z3 symplectic form)"""
    xa, za = a.symplectic(num_sites)
    xb, zb = b.symplectic(num_sites)
    return int((za @ xb - xa @ zb) % 3)


def symbolic_commutes(terms_a, terms_b, num_sites):
    """True when every term of one sum commutes with every term of the other"""
    return all(commutation_phase(a, b, num_sites) == 0 for a in terms_a for b in terms_b)


@dataclass(frozen=True, eq=False)
class LatticeOperator:
    """Operator on N qutrits stored as a sparse 3^N x 3^N matrix"""

    num_sites: int
    matrix: sp.csr_matrix = field(repr=False)

    @classmethod
    def zero(cls, num_sites):
        check_sites(num_sites)
        dim = 3**num_sites
        return cls(num_sites, sp.csr_matrix((dim, dim), dtype=np.complex128))

    @classmethod
    def from_specs(cls, specs, num_sites):
        total = cls.zero(num_sites)
        for spec in specs:
            total = total + spec.materialize(num_sites)
        return total

    @classmethod
    def diagonal(cls, values):
        values = np.asarray(values, dtype=np.complex128)
        num_sites = int(round(np.log(values.size) / np.log(3)))
        if 3**num_sites != values.size:
            raise ValueError(f"diagonal of length {values.size} is not a power of 3")
        return cls(num_sites, sp.diags(values, format="csr"))

    @property
    def dim(self):
        return self.matrix.shape[0]

    def _same_space(self, other):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        self._same_space(other)
        return LatticeOperator(self.num_sites, (self.matrix + other.matrix).tocsr())

    def __sub__(self, other):
        self._same_space(other)
        return LatticeOperator(self.num_sites, (self.matrix - other.matrix).tocsr())

    def __mul__(self, scalar):
        return LatticeOperator(self.num_sites, (self.matrix * scalar).tocsr())

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, LatticeOperator):
            self._same_space(other)
            return LatticeOperator(self.num_sites, (self.matrix @ other.matrix).tocsr())
        return self.matrix @ np.asarray(other)

    def adjoint(self):
        return LatticeOperator(self.num_sites, self.matrix.conj().T.tocsr())

    def max_abs(self):
        if self.matrix.nnz == 0:
            return 0.0
        return float(np.max(np.abs(self.matrix.data)))

    def is_hermitian(self, tol=Config.HERMITIAN_TOL):
        return (self - self.adjoint()).max_abs() < tol

    def is_diagonal(self):
        coo = self.matrix.tocoo()
        off = coo.row != coo.col
        return not np.any(np.abs(coo.data[off]) > 0)

    def toarray(self):
        return self.matrix.toarray()


def commutes(a, b, tol=Config.SPECTRAL_TOL):
    """max |AB - BA| below tol"""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return commutator_norm(a, b) < tol


def commutator_norm(a, b):
    return ((a @ b) - (b @ a)).max_abs()
