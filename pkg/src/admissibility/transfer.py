import csv
import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ..config import Config
from ..errors import SingularMatrixError
from ..gf3 import GF3Matrix, binomial_mod3, determinant, mat_pow, multiplicative_order

# largest k whose T_{3^k}^{3^k} is also raised directly
DIRECT_POWER_MAX_K = 5


def shift_matrix(n):
    """Cyclic shift U_n with U[i][i+1 mod n] = 1"""
    return GF3Matrix(np.roll(np.eye(n, dtype=np.int64), 1, axis=1))


@dataclass(frozen=True)
class TransferMatrix:
    """T_n = -(1 + U_n) over GF(3)"""

    n: int
    matrix: GF3Matrix

    def apply(self, row):
        return self.matrix.mat_vec(row)

    @property
    def singular(self):
        return determinant(self.matrix) == 0


def transfer_matrix(n):
    if n < 2:
        raise ValueError(f"transfer matrix needs n >= 2, got {n}")
    ident = np.eye(n, dtype=np.int64)
    return TransferMatrix(n, GF3Matrix(-(ident + shift_matrix(n).array)))


def is_admissible(n, m):
    return mat_pow(transfer_matrix(n).matrix, m).is_identity()


def minimal_period(n, cap=Config.ORDER_CAP):
    """Smallest m with T_n^m = 1; None beyond cap. Raises SingularMatrixError for singular T_n."""
    return multiplicative_order(transfer_matrix(n).matrix, cap)


def verify_power_of_three_argument(k):
    """C(3^k, r) = 0 mod 3 for 0 < r < 3^k, hence T^{3^k} = -(1 + U^{3^k}) = 1"""
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    n = 3**k
    # exact binomials for small k, Lucas' theorem above
    method = "exact" if k <= 3 else "lucas"
    if method == "exact":
        offenders = [r for r in range(1, n) if math.comb(n, r) % 3]
    else:
        offenders = [r for r in range(1, n) if binomial_mod3(n, r)]
    lucas_agrees = all(binomial_mod3(n, r) == math.comb(n, r) % 3 for r in range(n + 1)) if k <= 3 else None

    # U^n is a full cyclic turn, so the sum collapses to -(1 + U^n)
    u_power = np.roll(np.eye(n, dtype=np.int64), n, axis=1)
    collapsed = GF3Matrix(-(np.eye(n, dtype=np.int64) + u_power))
    power_is_identity = mat_pow(transfer_matrix(n).matrix, n).is_identity() if k <= DIRECT_POWER_MAX_K else None
    return {
        "k": k,
        "n": n,
        "method": method,
        "binomials_divisible": not offenders,
        "offending_r": offenders,
        "lucas_agrees_with_exact": lucas_agrees,
        "collapsed_power_is_identity": collapsed.is_identity(),
        "transfer_power_is_identity": power_is_identity,
    }


@dataclass(frozen=True)
class PeriodEntry:
    n: int
    minimal_m: object  # int, or None when not found within m_max
    singular: bool

    @property
    def admissible_examples(self):
        if self.minimal_m is None:
            return []
        return [self.minimal_m * j for j in (1, 2, 3)]


def _period_entry(n, m_max):
    try:
        period = minimal_period(n, cap=m_max)
    except SingularMatrixError:
        return PeriodEntry(n, None, True)
    return PeriodEntry(n, period, False)


def search_admissible(n_max, m_max, n_min=2, workers=1):
    """Minimal admissible m <= m_max for each n in [n_min, n_max], sorted by n"""
    if n_max < 2 or m_max < 2:
        raise ValueError("search bounds must be at least 2")
    ns = range(max(2, n_min), n_max + 1)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        entries = list(pool.map(lambda n: _period_entry(n, m_max), ns))
    return sorted(entries, key=lambda e: e.n)


def quoted_pairs_report(pairs=Config.QUOTED_PERIODS, cap=Config.ORDER_CAP):
    """Each quoted (n, m): admissible, minimal period, and whether m is a multiple of it"""
    report = []
    for n, m in pairs:
        period = minimal_period(n, cap)
        report.append(
            {
                "n": n,
                "quoted_m": m,
                "admissible": is_admissible(n, m),
                "minimal_m": period,
                "quoted_is_multiple": period is not None and m % period == 0,
                "quoted_is_minimal": period == m,
            }
        )
    return report


def admissibility_csv(entries):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "minimal_m", "admissible_examples"])
    for entry in entries:
        if entry.singular:
            writer.writerow([entry.n, "singular", ""])
        elif entry.minimal_m is None:
            writer.writerow([entry.n, "not-found", ""])
        else:
            writer.writerow([entry.n, entry.minimal_m, " ".join(str(m) for m in entry.admissible_examples)])
    return buffer.getvalue()
