"""
Configuration module for the atlas.

This module provides centralized configuration management including:
- Application settings (tolerances, sampling defaults, paths)
- The validated run configuration (SuiteConfig)
- Check definitions and the statements they certify

All configurable values should be imported from this module to ensure
consistency across the application.
"""

from .settings import (
    # Paths
    BASE_DIR,
    REPORTS_DIR,

    # Sampling
    DEFAULT_SEED,
    DEFAULT_SAMPLES,
    SAMPLE_RADIUS,
    WORKERS,

    # Tolerances
    TOL_EXACT,
    TOL_FD,
    FD_STEP,
    FD_BRACKET_STEP,
    FLOW_DT,

    # Bounds
    N_MIN,
    N_MAX,
    K_MAX,
    SUITE_NAMES,

    # Validation Helpers
    validate_dimension,
    validate_rep_degree,
    validate_theta,

    # Logging
    LOG_LEVEL,
    LOG_FORMAT,
)

from .suite_config import SuiteConfig

from .anchors import (
    CHECK_DEFINITIONS,
    get_check_by_name,
)

__all__ = [
    # Settings
    "BASE_DIR",
    "REPORTS_DIR",
    "DEFAULT_SEED",
    "DEFAULT_SAMPLES",
    "SAMPLE_RADIUS",
    "WORKERS",
    "TOL_EXACT",
    "TOL_FD",
    "FD_STEP",
    "FD_BRACKET_STEP",
    "FLOW_DT",
    "N_MIN",
    "N_MAX",
    "K_MAX",
    "SUITE_NAMES",
    "validate_dimension",
    "validate_rep_degree",
    "validate_theta",
    "LOG_LEVEL",
    "LOG_FORMAT",

    # Run configuration
    "SuiteConfig",

    # Checks
    "CHECK_DEFINITIONS",
    "get_check_by_name",
]
