# qwalk_mub/core/constants.py

"""
Tolerances, caps and defaults shared across the qwalk_mub package.
"""

import math

# --- Package ---
ARTIFACT_NAME = "qwalk_mub"

# --- Numerical tolerances ---
UNITARITY_TOL: float = 1e-12            # coin matrix C·C† = I
NORM_TOL: float = 1e-10                 # PureState normalization
ANALYTIC_RESIDUAL_TOL: float = 1e-9     # ‖Uv − λv‖ for closed-form eigenpairs
NUMERICAL_RESIDUAL_TOL: float = 1e-8    # same, dense oracle
NON_UNITARY_TOL: float = 1e-8           # accepted ‖U†U − I‖ for the oracle input
CLUSTER_ANGLE_TOL: float = 1e-8         # eigenvalue-angle tolerance for degenerate clusters
BOUND_TOL: float = 1e-9                 # squared overlap vs 1/d
MUB_TOL: float = 1e-10                  # exact-MUB squared overlaps vs 1/d
ORTHOGONAL_TOL: float = 1e-12           # overlaps that must vanish
STOCHASTIC_TOL: float = 1e-7            # row/column sums of squared overlap matrices
THETA_ZERO_TOL: float = 1e-14           # sinθ below this selects the θ = 0 branch

# --- Caps ---
DEFAULT_DIMENSION_CAP: int = 4096       # largest d for dense 2d×2d operators
VIOLATION_CAP: int = 100                # stored violations per report
FULL_GRID_LIMIT: int = 256              # larger d writes only the top entries of an overlap grid
TOP_ENTRIES: int = 100

# --- Primality ---
# Deterministic Miller-Rabin witnesses, valid for every n < 3.3e24 (covers 2^63).
MILLER_RABIN_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# --- Dynamics ---
DEFAULT_SWITCH_STEP: int = 100
DEFAULT_STEPS: int = 800
FIG2_DIMENSION: int = 1063

# --- Dirac quadrature ---
SAMPLES_PER_PERIOD: int = 40
GAUSS_LEGENDRE_ORDER: int = 8
DEFAULT_WINDOWS = (20.0, 40.0, 80.0)
DELTA_NORMALIZATION: float = 1.0 / math.sqrt(2.0 * math.pi)

# --- CLI / configuration ---
DEFAULT_SEED: int = 20240229
DEFAULT_OUTPUT_DIR = "results"
OUTPUT_DIR_ENV_VAR = "QWALK_MUB_OUTPUT_DIR"
OUTPUT_FORMATS = ("csv", "json", "dat")

EXIT_OK: int = 0
EXIT_USAGE: int = 2
EXIT_VIOLATION: int = 3
EXIT_IO: int = 4
