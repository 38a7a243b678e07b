"""
Atlas Test Suite

Unit, property and integration tests for all modules.
Run tests with: pytest tests/
Skip whole-suite runs with: pytest tests/ -m "not integration"
"""

import sys
from pathlib import Path

import numpy as np

# Add project root to Python path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

# Test configuration
SEEDS = (0, 1, 7, 42)
DESK_CONFIGS = ((2, ()), (3, ()), (3, (1,)), (4, (2,)))

# Worked SL(2) values
SL2_H0 = np.diag([1.0, -1.0]).astype(complex)
SL2_LOWER = np.array([[1.0, 0.0], [2.0, -1.0]], dtype=complex)

__all__ = [
    "SEEDS",
    "DESK_CONFIGS",
    "SL2_H0",
    "SL2_LOWER",
]
