"""
Application settings and configuration values.

This module centralizes all configuration values including:
- File paths
- Numerical tolerances and finite-difference steps
- Sampling defaults
- Desk-scale bounds on the algebra and representation sizes

Environment variables are loaded via python-dotenv.
"""

import os
import sys
from pathlib import Path
from typing import Optional
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# ============================================================================
# PATHS
# ============================================================================

BASE_DIR = Path(__file__).parent.parent
REPORTS_DIR = Path(os.getenv("ATLAS_REPORTS_DIR", str(BASE_DIR / "reports")))

# ============================================================================
# SAMPLING DEFAULTS
# ============================================================================

DEFAULT_SEED = int(os.getenv("ATLAS_DEFAULT_SEED", "42"))
DEFAULT_SAMPLES = int(os.getenv("ATLAS_DEFAULT_SAMPLES", "50"))
SAMPLE_RADIUS = float(os.getenv("ATLAS_SAMPLE_RADIUS", "2.0"))
WORKERS = int(os.getenv("ATLAS_WORKERS", "1"))

# ============================================================================
# TOLERANCES
# ============================================================================

# Check thresholds (overridable per run through SuiteConfig)
TOL_EXACT = float(os.getenv("ATLAS_TOL_EXACT", "1e-8"))
TOL_FD = float(os.getenv("ATLAS_TOL_FD", "1e-4"))

# Finite differences
FD_STEP = float(os.getenv("ATLAS_FD_STEP", "1e-5"))
FD_BRACKET_STEP = float(os.getenv("ATLAS_FD_BRACKET_STEP", "1e-3"))

# Flow integration
FLOW_DT = float(os.getenv("ATLAS_FLOW_DT", "1e-3"))
FLOW_DRIFT_TOL = 1e-6

# Fixed kernel thresholds
EIGEN_GAP_TOL = 1e-6  # relative to the matrix norm
SPECTRUM_TOL = 1e-8
WITHIN_BLOCK_TOL = 1e-8
STAGE_SPECTRUM_TOL = 1e-4  # RK4 stage points sit slightly off the flag
TRANSVERSAL_TOL = 1e-8
DET_TOL = 1e-10
LSTSQ_TOL = 1e-8
TANGENT_TOL = 1e-8

# ============================================================================
# DESK-SCALE BOUNDS
# ============================================================================

N_MIN = 2
N_MAX = 8
K_MAX = 4

SUITE_NAMES = (
    "liealg",
    "weyl",
    "orbit",
    "cotangent",
    "product",
    "rep",
    "lagrangian",
)

# ============================================================================
# VALIDATION HELPERS
# ============================================================================

def validate_dimension(n: int) -> tuple[bool, Optional[str]]:
    """
    Validate the matrix size of sl(n, C).

    Args:
        n: Matrix size

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not isinstance(n, int) or isinstance(n, bool):
        return False, f"n must be an integer, got {type(n).__name__}"

    if not N_MIN <= n <= N_MAX:
        return False, f"n={n} is outside the supported range [{N_MIN}, {N_MAX}]"

    return True, None


def validate_rep_degree(n: int, k: int) -> tuple[bool, Optional[str]]:
    """
    Validate the exterior-power degree k for sl(n, C).

    Args:
        n: Matrix size
        k: Exterior power degree

    Returns:
        Tuple of (is_valid, error_message)
    """
    ok, error = validate_dimension(n)
    if not ok:
        return ok, error

    upper = min(K_MAX, n - 1)
    if not 1 <= k <= upper:
        return False, f"k={k} must lie in [1, {upper}] for n={n}"

    return True, None


def validate_theta(n: int, theta) -> tuple[bool, Optional[str]]:
    """
    Validate a set of simple-root indices.

    Args:
        n: Matrix size
        theta: Iterable of 1-based simple-root indices

    Returns:
        Tuple of (is_valid, error_message)
    """
    bad = [i for i in theta if not 1 <= int(i) <= n - 1]
    if bad:
        return False, f"theta indices {bad} are outside [1, {n - 1}]"

    return True, None


# ============================================================================
# DEVELOPMENT / DEBUG SETTINGS
# ============================================================================

DEBUG = os.getenv("ATLAS_DEBUG", "false").lower() == "true"
LOG_LEVEL = os.getenv("ATLAS_LOG_LEVEL", "INFO")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

# Print configuration summary on import (only in debug mode); stdout carries JSON lines
if DEBUG:
    print("\n" + "="*60, file=sys.stderr)
    print("🔧 Atlas Configuration Loaded", file=sys.stderr)
    print("="*60, file=sys.stderr)
    print(f"Seed: {DEFAULT_SEED}  Samples: {DEFAULT_SAMPLES}", file=sys.stderr)
    print(f"tol_exact: {TOL_EXACT}  tol_fd: {TOL_FD}", file=sys.stderr)
    print(f"FD step: {FD_STEP}  Flow dt: {FLOW_DT}", file=sys.stderr)
    print(f"Reports Directory: {REPORTS_DIR}", file=sys.stderr)
    print("="*60 + "\n", file=sys.stderr)
