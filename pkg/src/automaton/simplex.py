from itertools import combinations

import numpy as np

from ..config import Config

SIMPLEX_SITES = 4


def simplex_tensor():
    """A[s, i, j, k] = 1 iff j = i + s and k = i + 2s (mod 3)"""
    tensor = np.zeros((3, 3, 3, 3), dtype=np.int8)
    for s in range(3):
        for i in range(3):
            tensor[s, i, (i + s) % 3, (i + 2 * s) % 3] = 1
    return tensor


def simplex_state():
    """Four-qutrit state sum_{i,s} |s, i, i+s, i+2s> / 3 over 81 amplitudes"""
    return simplex_tensor().reshape(81).astype(np.complex128) / 3.0


def reduced_density_matrix(state, keep, num_sites, local_dim=3):
    """Partial trace of a pure state onto the sites in keep"""
    keep = list(keep)
    rest = [s for s in range(num_sites) if s not in keep]
    psi = np.asarray(state).reshape((local_dim,) * num_sites).transpose(keep + rest)
    mat = psi.reshape(local_dim ** len(keep), -1)
    return mat @ mat.conj().T


def verify_ame(state=None, tol=Config.AME_TOL):
    """Every 1-site marginal is I/3 and every 2-site marginal has spectrum {1/9} x 9"""
    psi = simplex_state() if state is None else np.asarray(state)
    norm = float(np.linalg.norm(psi))
    marginals = []
    passed = abs(norm - 1.0) < tol
    for size in (1, 2):
        target = 1.0 / 3**size
        for keep in combinations(range(SIMPLEX_SITES), size):
            rho = reduced_density_matrix(psi, keep, SIMPLEX_SITES)
            spectrum = np.linalg.eigvalsh(rho)
            deviation = float(np.max(np.abs(rho - target * np.eye(3**size))))
            ok = deviation < tol
            passed = passed and ok
            marginals.append(
                {
                    "sites": list(keep),
                    "spectrum": [round(float(v), 12) for v in spectrum],
                    "max_deviation": deviation,
                    "maximally_mixed": ok,
                }
            )

    # any two legs determine the other two
    support = np.argwhere(simplex_tensor() == 1)
    pair_maps = {}
    for pair in combinations(range(SIMPLEX_SITES), 2):
        projected = {tuple(row[list(pair)]) for row in support}
        pair_maps[f"{pair[0]}{pair[1]}"] = len(projected) == len(support)
    passed = passed and all(pair_maps.values())

    return {
        "norm": norm,
        "marginals": marginals,
        "pair_determines_rest": pair_maps,
        "ame": passed,
        "tolerance": tol,
    }
