"""
Matrix IO Client - JSON Interchange Utility

Handles the file formats of the atlas:
- Matrices as nested arrays whose entries are [re, im] pairs
- Report files (UTF-8 JSON)
- Per-check JSON lines for CI consumption
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np

from core.errors import ContractViolation

logger = logging.getLogger(__name__)


# ============================================================================
# MATRIX ENCODING
# ============================================================================

def encode_matrix(M: np.ndarray) -> list:
    """
    Encode a complex array as nested lists of [re, im] pairs.

    Args:
        M: Array of any shape (scalars, vectors and matrices)

    Returns:
        JSON-ready nested list with the shape of M plus a trailing axis of 2

    Example:
        >>> encode_matrix(np.array([[1, 1j]]))
        [[[1.0, 0.0], [0.0, 1.0]]]
    """
    A = np.asarray(M, dtype=complex)
    return np.stack([A.real, A.imag], axis=-1).tolist()


def decode_matrix(data: Any, vector: bool = False) -> np.ndarray:
    """
    Decode nested [re, im] pairs into a complex array.

    A 3-d array with a trailing axis of 2 is a pair-encoded matrix; 1-d and
    2-d arrays are plain real data. With vector=True a 2-d array with a
    trailing axis of 2 is read as a pair-encoded vector instead.

    Raises:
        ContractViolation: If the data is ragged or not numeric
    """
    try:
        A = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as e:
        raise ContractViolation(f"matrix data is not a numeric array: {e}") from e

    pair_rank = 2 if vector else 3
    if A.ndim == pair_rank and A.shape[-1] == 2:
        return A[..., 0] + 1j * A[..., 1]
    if A.ndim in (1, 2):
        return A.astype(complex)
    raise ContractViolation(f"cannot read a matrix from an array of shape {A.shape}")


def load_matrix(source: Union[str, Path], vector: bool = False) -> np.ndarray:
    """
    Read a matrix from a JSON file or from an inline JSON string.

    Args:
        source: Path to a .json file, or the JSON text itself
        vector: Read a 2-d pair array as a vector

    Returns:
        Complex array

    Raises:
        ContractViolation: If the text is not valid JSON
    """
    text = str(source)
    path = Path(text)
    if not text.lstrip().startswith("[") and path.exists():
        logger.debug(f"Reading matrix from {path}")
        text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ContractViolation(f"invalid matrix JSON: {e}") from e
    return decode_matrix(data, vector=vector)


# ============================================================================
# REPORTS
# ============================================================================

def to_json_line(entry: Dict[str, Any]) -> str:
    """One compact JSON line; keys keep their insertion order."""
    return json.dumps(entry, ensure_ascii=False, separators=(",", ":"))


def write_report(report: Dict[str, Any], path: Union[str, Path]) -> Path:
    """
    Write a report as indented UTF-8 JSON, creating parent directories.

    Returns:
        The path written
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(report, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    logger.info(f"📄 Report written to {path}")
    return path


def read_report(path: Union[str, Path]) -> Dict[str, Any]:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Report not found: {path}")
    return json.loads(path.read_text(encoding="utf-8"))
