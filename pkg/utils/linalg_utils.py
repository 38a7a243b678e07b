"""
Small linear-algebra helpers shared by the kernels.

Provides:
- Commutators and conjugate transposes
- Realification of complex matrices (for least squares over R)
- Numerical rank and line comparison
"""

from typing import Iterable

import numpy as np
import scipy.linalg


def dagger(M: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return M.conj().T


def comm(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix commutator [A, B] = AB - BA."""
    return A @ B - B @ A


def norm(M: np.ndarray) -> float:
    """Frobenius norm (2-norm for vectors)."""
    return float(np.linalg.norm(M))


def scale_of(*arrays: np.ndarray) -> float:
    """Relative-tolerance scale: max(1, largest norm)."""
    return max([1.0] + [norm(a) for a in arrays])


def to_real_vector(M: np.ndarray) -> np.ndarray:
    """Flatten a complex array into [Re, Im] real coordinates."""
    flat = np.asarray(M, dtype=complex).ravel()
    return np.concatenate([flat.real, flat.imag])


def stack_real(arrays: Iterable[np.ndarray]) -> np.ndarray:
    """Stack realified arrays as the columns of a real matrix."""
    return np.column_stack([to_real_vector(a) for a in arrays])


def numerical_rank(columns: np.ndarray, rel_tol: float = 1e-8) -> int:
    """
    Rank of a real or complex matrix by singular values.

    Args:
        columns: Matrix whose column span is measured
        rel_tol: Threshold relative to the largest singular value

    Returns:
        Number of singular values above rel_tol * sigma_max
    """
    if columns.size == 0:
        return 0
    s = scipy.linalg.svdvals(columns)
    if s[0] == 0.0:
        return 0
    return int(np.sum(s > rel_tol * s[0]))


def independent_subset(vectors: list, rel_tol: float = 1e-8) -> list:
    """
    Greedily keep the vectors that enlarge the span.

    Args:
        vectors: Arrays of identical shape
        rel_tol: Rank threshold

    Returns:
        Indices of a maximal independent subset
    """
    kept: list = []
    for idx in range(len(vectors)):
        trial = stack_real([vectors[i] for i in kept + [idx]])
        if numerical_rank(trial, rel_tol) == len(kept) + 1:
            kept.append(idx)
    return kept


def same_line(a: np.ndarray, b: np.ndarray) -> float:
    """
    Distance between the complex lines spanned by a and b.

    Returns:
        1 - |<a, b>| / (|a| |b|), which is 0 exactly when the lines agree
    """
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    return float(1.0 - abs(np.vdot(a, b)) / (np.linalg.norm(a) * np.linalg.norm(b)))


def normalize_phase(v: np.ndarray) -> np.ndarray:
    """Unit representative of the line through v whose largest entry is real positive."""
    v = np.asarray(v, dtype=complex).ravel()
    v = v / np.linalg.norm(v)
    pivot = v[np.argmax(np.abs(v))]
    return v * (abs(pivot) / pivot)


def haar_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """
    Haar-distributed element of SU(n).

    QR of a complex Gaussian matrix with the phases of diag(R) moved into Q,
    then the determinant is divided out of the first column.
    """
    G = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    Q, R = scipy.linalg.qr(G)
    d = np.diag(R)
    Q = Q * (d / np.abs(d))[np.newaxis, :]
    Q[:, 0] /= np.linalg.det(Q)
    return Q
