import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

class Config:
    # Runtime Configuration
    WORKERS = int(os.getenv("HCODE_WORKERS", str(os.cpu_count() or 1)))
    SEED = int(os.getenv("HCODE_SEED", "2015"))
    REPORT_DIR = os.getenv("HCODE_REPORT_DIR", ".")

    # Tolerances
    SPECTRAL_TOL = 1e-9
    HERMITIAN_TOL = 1e-12
    STATE_TOL = 1e-12
    ENTROPY_TOL = 1e-9
    AME_TOL = 1e-10
    GAP_TOL = 1e-6

    # Size guards
    ENUMERATION_MAX_N = 16        # 3^n codewords swept exhaustively
    DENSE_MAX_SITES = 10          # full 3^N operators
    DENSE_EIGH_MAX_DIM = 2187     # blocks above this go to the iterative solver
    BRUTE_FORCE_MAX_N = 9
    BRUTE_FORCE_MAX_SIDE = 7      # smaller side of a brute-force bipartition
    SYMBOLIC_MAX_K = 2
    ORDER_CAP = 10**6

    # Sampling
    CHARGE_SAMPLES = 10_000
    ENTROPY_REGION_SAMPLES = 500
    GROWTH_PATHS = 100
    GROWTH_STEPS = 6
    PAIR_SAMPLES = 100_000
    SWEEP_CHUNK = 2187

    # Values quoted in the literature that the checks compare against
    QUOTED_PERIODS = ((5, 40), (7, 182), (11, 121))
    QUOTED_CONSTRAINT_RANK = 2
    QUOTED_HX_SPECTRUM = ((-6.0, 1), (0.0, 6), (3.0, 2))

    GUARD_ERROR_MESSAGE = """
🚨 Resource guard exceeded!

The requested computation is outside desk scale:
1. Exhaustive codeword sweeps are limited to n <= {enum_n}
2. Full-space operators are limited to N <= {dense} qutrits
3. Symbolic parent Hamiltonians are limited to k <= {sym_k}

Solutions:
1. Use the sampled distance mode (reports an upper bound)
2. Use sector-restricted spectra on the 3x3 torus
3. Lower k
"""

    @classmethod
    def validate(cls):
        """Validate that runtime configuration is usable"""
        if cls.WORKERS < 1:
            raise ValueError(f"""
❌ HCODE_WORKERS must be a positive integer (got {cls.WORKERS})!

To fix this:
1. Remove HCODE_WORKERS from your .env file to use all cores
2. Or set it explicitly:
   export HCODE_WORKERS=4
""")
        if cls.SEED < 0:
            raise ValueError(f"""
❌ HCODE_SEED must be a non-negative integer (got {cls.SEED})!

To fix this:
1. Remove HCODE_SEED from your .env file to use the default seed
2. Or set it explicitly:
   export HCODE_SEED=2015
""")
        return True

    @classmethod
    def get_guard_error_message(cls):
        """Get formatted resource guard message"""
        return cls.GUARD_ERROR_MESSAGE.format(
            enum_n=cls.ENUMERATION_MAX_N, dense=cls.DENSE_MAX_SITES, sym_k=cls.SYMBOLIC_MAX_K
        )

    @classmethod
    def snapshot(cls, workers=None, seed=None):
        """Effective configuration echoed into every report"""
        return {
            "workers": cls.WORKERS if workers is None else workers,
            "seed": cls.SEED if seed is None else seed,
            "spectral_tol": cls.SPECTRAL_TOL,
            "hermitian_tol": cls.HERMITIAN_TOL,
            "state_tol": cls.STATE_TOL,
            "entropy_tol": cls.ENTROPY_TOL,
            "gap_tol": cls.GAP_TOL,
        }

# Validate configuration on import
Config.validate()
