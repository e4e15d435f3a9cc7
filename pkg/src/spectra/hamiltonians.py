import numpy as np

from ..config import Config
from ..errors import EnumerationLimitError
from ..lattice import TorusLattice
from .operators import LatticeOperator, OperatorSpec, Q_PHASE, basis_digits, check_sites

# Parent-Hamiltonian strings on the 3x3 torus written with labels 1..9,
# rows (1,2,3), (4,5,6), (7,8,9) from the boundary up; label i is site i - 1.
HX_STRINGS = (
    ((1, 1), (2, -1), (5, 1), (6, -1), (7, -1), (9, 1)),
    ((2, 1), (3, -1), (4, -1), (6, 1), (7, 1), (8, -1)),
    ((1, 1), (3, -1), (4, -1), (5, 1), (8, -1), (9, 1)),
)

# Third string in its commonly quoted form; it frustrates triangle (4, 5, 7).
HX_THIRD_STRING_QUOTED = ((1, 1), (3, -1), (4, -1), (5, 1), (7, -1), (8, 1))

HX_PRIME_STRINGS = (
    ((1, 1), (2, 1), (4, 1), (5, -1), (6, -1), (8, -1)),
    ((2, 1), (3, 1), (4, -1), (5, 1), (6, -1), (9, -1)),
    ((1, 1), (3, 1), (4, -1), (5, -1), (6, 1), (7, -1)),
)

TORUS_3X3 = TorusLattice(3, 3)


def string_exponents(string, num_sites=9):
    """Exponent vector of a labelled X-string"""
    out = np.zeros(num_sites, dtype=np.int64)
    for label, e in string:
        out[label - 1] += e
    return out % 3


def _x_terms(strings):
    terms = []
    for n in (1, -1):
        for string in strings:
            terms.append(OperatorSpec.x_string(n * string_exponents(string), coefficient=-1.0))
    return terms


def hx_terms():
    return _x_terms(HX_STRINGS)


def hx_prime_terms():
    return _x_terms(HX_PRIME_STRINGS)


def hz_diagonal(lattice):
    """Diagonal of sum over up-triangles of 2 - ZZZ - (ZZZ)^2"""
    check_sites(lattice.num_sites)
    digits = basis_digits(lattice.num_sites).astype(np.int64)
    diag = np.zeros(digits.shape[0], dtype=np.complex128)
    for tri in lattice.up_triangles():
        total = digits[:, list(tri)].sum(axis=1) % 3
        zzz = Q_PHASE**total
        diag += 2 - zzz - zzz**2
    return diag


def build_HZ(lattice):
    return LatticeOperator.diagonal(hz_diagonal(lattice))


def classical_hz_energy(config):
    """H_Z eigenvalue of a basis state: 3 per frustrated triangle"""
    return 3 * len(config.frustrated_triangles())


def build_HX_3x3():
    return LatticeOperator.from_specs(hx_terms(), 9)


def build_HX_prime_3x3():
    return LatticeOperator.from_specs(hx_prime_terms(), 9)


def build_HX_general(k):
    """-sum_{n=+-1} sum_{p=0,+-1} prod_{a,b} X_{a,b}^{n(a-b+p)} on the 3^k torus, as OperatorSpecs"""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if k > Config.SYMBOLIC_MAX_K:
        raise EnumerationLimitError("k", k, Config.SYMBOLIC_MAX_K, "symbolic terms are only built for small k")
    side = 3**k
    lattice = TorusLattice(side, side)
    a, b = np.meshgrid(np.arange(side), np.arange(side), indexing="ij")
    terms = []
    for n in (1, -1):
        for p in (0, 1, -1):
            exps = np.zeros(lattice.num_sites, dtype=np.int64)
            exps[[lattice.site(r, c) for r, c in zip(a.ravel(), b.ravel())]] = n * (a - b + p).ravel()
            terms.append(OperatorSpec.x_string(exps % 3, coefficient=-1.0))
    return terms


def line_balance(spec, lattice):
    """Each row and column cycle holds as many X as X^-1 factors"""
    exps = spec.exponents(lattice.num_sites)
    for line in lattice.cycles()[0] + lattice.cycles()[1]:
        values = exps[line]
        if np.count_nonzero(values == 1) != np.count_nonzero(values == 2):
            return False
    return True


def charge_spec(cycle):
    return OperatorSpec(tuple((site, "Z", 1) for site in cycle))


def build_charge(cycle, num_sites):
    """Q = product of Z along a cycle"""
    return charge_spec(cycle).materialize(num_sites)


def boundary_terms(n, periodic=True):
    """-sum_i sum_{a+b=0} X_i^a X_{i+1}^b, identity term included"""
    if n < 2:
        raise ValueError(f"boundary needs at least 2 qutrits, got {n}")
    pairs = range(n) if periodic else range(n - 1)
    terms = []
    for i in pairs:
        j = (i + 1) % n
        for a, b in ((0, 0), (1, 2), (2, 1)):
            terms.append(OperatorSpec(((i, "X", a), (j, "X", b)), coefficient=-1.0))
    return terms


def build_H_boundary(n, periodic=True):
    check_sites(n)
    return LatticeOperator.from_specs(boundary_terms(n, periodic), n)
