"""
Weyl group of type A_{n-1}.

Elements are permutations of {0..n-1}; representatives are signed
permutation matrices in SU(n). Also provides the principal involution,
the duality Theta -> Theta*, and the right Weyl action on regular orbit points.
"""

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import FrozenSet, Iterable, Iterator, Tuple

import numpy as np
import scipy.linalg

from config.settings import EIGEN_GAP_TOL
from core.errors import ContractViolation, NotRegularError
from utils.linalg_utils import dagger

logger = logging.getLogger(__name__)


# ============================================================================
# DATA STRUCTURES
# ============================================================================

@dataclass(frozen=True)
class WeylElement:
    """
    Permutation w of {0..n-1}; perm[i] = w(i).

    Attributes:
        perm: One-line notation, 0-based
    """
    perm: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ContractViolation(f"{self.perm} is not a permutation")

    @property
    def n(self) -> int:
        return len(self.perm)

    def inverse(self) -> "WeylElement":
        inv = [0] * self.n
        for i, image in enumerate(self.perm):
            inv[image] = i
        return WeylElement(tuple(inv))

    def compose(self, other: "WeylElement") -> "WeylElement":
        """(self o other)(i) = self(other(i))."""
        return WeylElement(tuple(self.perm[other.perm[i]] for i in range(self.n)))

    def length(self) -> int:
        """Number of inversions."""
        p = self.perm
        return sum(1 for i in range(self.n) for j in range(i + 1, self.n) if p[i] > p[j])

    def to_json(self) -> list:
        # 1-based one-line notation
        return [i + 1 for i in self.perm]


@dataclass(frozen=True)
class ThetaSet:
    """
    Subset of simple roots, by 1-based index k for alpha_k = (k-1, k).

    Attributes:
        indices: Subset of {1..n-1}
    """
    indices: FrozenSet[int] = frozenset()

    @classmethod
    def of(cls, indices: Iterable[int]) -> "ThetaSet":
        return cls(frozenset(int(i) for i in indices))

    def validate(self, n: int) -> "ThetaSet":
        bad = [i for i in self.indices if not 1 <= i <= n - 1]
        if bad:
            raise ContractViolation(f"theta indices {sorted(bad)} outside [1, {n - 1}]")
        return self

    def sorted(self) -> list:
        return sorted(self.indices)


# ============================================================================
# GROUP STRUCTURE
# ============================================================================

def identity(n: int) -> WeylElement:
    return WeylElement(tuple(range(n)))


def all_elements(n: int) -> Iterator[WeylElement]:
    """Every element of S_n, identity first."""
    for p in permutations(range(n)):
        yield WeylElement(p)


def principal_involution(n: int) -> WeylElement:
    """
    Longest element w0: i -> n-1-i.

    Args:
        n: Matrix size, at least 2

    Returns:
        WeylElement of maximal length n(n-1)/2
    """
    if n < 2:
        raise ContractViolation(f"n must be >= 2, got {n}")
    return WeylElement(tuple(n - 1 - i for i in range(n)))


def dual_theta(theta: ThetaSet, n: int) -> ThetaSet:
    """Theta* = -w0 Theta, i.e. k -> n - k."""
    theta.validate(n)
    return ThetaSet(frozenset(n - k for k in theta.indices))


def representative(w: WeylElement) -> np.ndarray:
    """
    Signed permutation matrix in SU(n) representing w.

    P e_i = e_{w(i)}, so Ad(P) diag(h) has h_{w^{-1}(j)} in position j.
    When det P = -1 the entry in the first row is negated.

    Example:
        >>> representative(WeylElement((1, 0)))
        array([[ 0.+0.j, -1.+0.j],
               [ 1.+0.j,  0.+0.j]])
    """
    n = w.n
    P = np.zeros((n, n), dtype=complex)
    for i, image in enumerate(w.perm):
        P[image, i] = 1.0
    if round(np.linalg.det(P).real) < 0:
        col = int(np.argmax(np.abs(P[0])))
        P[0, col] = -1.0
    return P


# ============================================================================
# RIGHT ACTION
# ============================================================================

def _chamber_eigendecomposition(x: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues sorted by decreasing real part, with matching eigenvectors."""
    x = np.asarray(x, dtype=complex)
    if np.allclose(x, dagger(x), atol=1e-12):
        values, vectors = scipy.linalg.eigh(x)
        return values[::-1].astype(complex), vectors[:, ::-1]
    values, vectors = scipy.linalg.eig(x)
    order = np.lexsort((-values.imag, -values.real))
    return values[order], vectors[:, order]


def right_action(x: np.ndarray, w: WeylElement) -> np.ndarray:
    """
    Right Weyl action on a point of a regular adjoint orbit.

    x = g diag(lambda) g^{-1} with lambda in chamber order is sent to
    g Ad(w~) diag(lambda) g^{-1}; the diagonalizer's torus ambiguity cancels.

    Args:
        x: Matrix with distinct eigenvalues
        w: Weyl element

    Returns:
        R_w(x)

    Raises:
        NotRegularError: If two eigenvalues are closer than the gap tolerance
    """
    x = np.asarray(x, dtype=complex)
    if x.shape != (w.n, w.n):
        raise ContractViolation(f"shape {x.shape} does not match n={w.n}")

    values, vectors = _chamber_eigendecomposition(x)
    gaps = np.abs(np.diff(values))
    scale = max(1.0, float(np.linalg.norm(x)))
    if gaps.size and gaps.min() < EIGEN_GAP_TOL * scale:
        raise NotRegularError(f"eigenvalue gap {gaps.min():.2e}")

    return right_action_in_frame(vectors, values, w)


def right_action_in_frame(vectors: np.ndarray, values: np.ndarray, w: WeylElement) -> np.ndarray:
    """
    R_w of vectors diag(values) vectors^{-1}, eigenvalues in chamber order.

    Rescaling the columns of `vectors` leaves the result unchanged.
    """
    inv = w.inverse().perm
    permuted = np.array([values[inv[j]] for j in range(w.n)])
    return vectors @ np.diag(permuted) @ scipy.linalg.inv(vectors)
