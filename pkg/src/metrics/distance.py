from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..automaton import HCode, boundary_digits
from ..config import Config
from ..errors import EnumerationLimitError
from ..lattice import TorusLattice


def hamming_weight(config):
    return int(np.count_nonzero(config.values))


def hamming_distance(a, b):
    if a.lattice != b.lattice:
        raise ValueError("cannot compare configurations on different lattices")
    return int(np.count_nonzero(a.values != b.values))


def _guard(code):
    if code.n > Config.ENUMERATION_MAX_N:
        raise EnumerationLimitError(
            "n", code.n, Config.ENUMERATION_MAX_N, "use sampled_min_distance for an upper bound"
        )


def _chunk_min_weight(code, start, stop):
    words = code.codeword_chunk(start, stop)
    weights = np.count_nonzero(words, axis=1)
    if start == 0:
        weights[0] = words.shape[1] + 1  # skip the zero codeword
    low = int(weights.min())
    return low, int(np.count_nonzero(weights == low))


@dataclass(frozen=True)
class DistanceResult:
    min_distance: int
    multiplicity: int
    codewords: int
    upper_bound: bool = False


def min_distance(lattice, workers=1, code=None):
    """Minimum nonzero-codeword weight by exhaustive 3^n sweep (the code is linear)"""
    code = code or HCode.build(lattice)
    _guard(code)
    chunks = code.chunks(Config.SWEEP_CHUNK)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        partial = list(pool.map(lambda span: _chunk_min_weight(code, *span), chunks))
    best = min(low for low, _ in partial)
    count = sum(cnt for low, cnt in partial if low == best)
    return DistanceResult(best, count, code.size)


def sampled_min_distance(lattice, samples, rng, code=None):
    """Upper bound on the minimum distance from random nonzero codewords"""
    code = code or HCode.build(lattice)
    boundaries = rng.integers(0, 3, size=(samples, code.n))
    zero = ~boundaries.any(axis=1)
    boundaries[zero, 0] = 1
    weights = np.count_nonzero(code.codewords_for(boundaries), axis=1)
    best = int(weights.min())
    return DistanceResult(best, int(np.count_nonzero(weights == best)), samples, upper_bound=True)


def pairwise_min_distance(lattice, pairs, rng, code=None):
    """Minimum direct distance over random pairs of distinct codewords"""
    code = code or HCode.build(lattice)
    left = rng.integers(0, 3, size=(pairs, code.n))
    right = rng.integers(0, 3, size=(pairs, code.n))
    same = (left == right).all(axis=1)
    right[same, 0] = (right[same, 0] + 1) % 3
    dist = np.count_nonzero(code.codewords_for(left) != code.codewords_for(right), axis=1)
    return int(dist.min())


def charge_label(values):
    """Sector S = sum of trits mod 3 along a cycle"""
    return int(np.asarray(values, dtype=np.int64).sum() % 3)


def charge_phase(sector):
    return {0: "1", 1: "q", 2: "q^2"}[int(sector) % 3]


def cycle_charge(config, cycle):
    sites = list(cycle)
    if any(not 0 <= s < config.lattice.num_sites for s in sites):
        raise ValueError("cycle leaves the lattice")
    return charge_label(config.values[sites])


def charge_report(config):
    lattice = config.lattice
    if not isinstance(lattice, TorusLattice):
        raise ValueError("charges are defined on torus cycles")
    rows, diagonals = lattice.cycles()
    row_charges = [cycle_charge(config, c) for c in rows]
    diagonal_charges = [cycle_charge(config, c) for c in diagonals]
    second = [cycle_charge(config, c) for c in lattice.second_diagonals()]
    labels = set(row_charges) | set(diagonal_charges)
    return {
        "rows": row_charges,
        "diagonals": diagonal_charges,
        "second_diagonals": second,
        "charge_constant": len(labels) == 1,
        "second_family_constant": len(labels | set(second)) == 1,
        "sector": row_charges[0],
        "phase": charge_phase(row_charges[0]),
    }


def _cycle_matrix(lattice, families):
    """Indicator matrix (sites x cycles) over the requested cycle families"""
    cycles = []
    rows, diagonals = lattice.cycles()
    if "rows" in families:
        cycles.extend(rows)
    if "diagonals" in families:
        cycles.extend(diagonals)
    if "second" in families:
        cycles.extend(lattice.second_diagonals())
    mat = np.zeros((lattice.num_sites, len(cycles)), dtype=np.int64)
    for j, cyc in enumerate(cycles):
        mat[cyc, j] = 1
    return mat


def charges_of(words, lattice, families=("rows", "diagonals")):
    """(k, cycles) charge labels for a batch of codewords"""
    return (np.asarray(words, dtype=np.int64) @ _cycle_matrix(lattice, families)) % 3


def charge_constancy(lattice, boundaries=None, families=("rows", "diagonals"), code=None):
    """True iff every codeword has one charge on all cycles of the families"""
    code = code or HCode.build(lattice)
    words = code.all_codewords() if boundaries is None else code.codewords_for(boundaries)
    charges = charges_of(words, lattice, families)
    return bool((charges == charges[:, :1]).all())


def _chunk_census(code, start, stop):
    sectors = boundary_digits(start, stop, code.n).sum(axis=1) % 3
    return np.bincount(sectors, minlength=3)


def sector_census(lattice, workers=1, code=None):
    """Boundary configurations per charge sector"""
    code = code or HCode.build(lattice)
    _guard(code)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        parts = list(pool.map(lambda span: _chunk_census(code, *span), code.chunks(Config.SWEEP_CHUNK)))
    totals = np.sum(parts, axis=0)
    return {s: int(totals[s]) for s in range(3)}
