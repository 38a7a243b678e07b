"""
Utilities package for shared linear-algebra helpers.
"""

from utils.linalg_utils import (
    comm,
    dagger,
    haar_unitary,
    independent_subset,
    norm,
    numerical_rank,
    same_line,
    scale_of,
    to_real_vector,
)

__all__ = [
    'comm', 'dagger', 'haar_unitary', 'independent_subset', 'norm',
    'numerical_rank', 'same_line', 'scale_of', 'to_real_vector',
]
