"""
Utility Clients Module

This module contains low-level clients for file formats. These are pure
utility functions that don't contain mathematics.

Clients:
- Matrix IO: [re, im] JSON matrices, report files and JSON lines
"""

from .matrix_io import (
    decode_matrix,
    encode_matrix,
    load_matrix,
    read_report,
    to_json_line,
    write_report,
)

__all__ = [
    "decode_matrix",
    "encode_matrix",
    "load_matrix",
    "read_report",
    "to_json_line",
    "write_report",
]
