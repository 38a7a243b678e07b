"""
Adjoint orbits of characteristic elements.

This module provides:
- Characteristic: the element H0 in the closed positive chamber and its block data
- parabolic_split: n- / z / n+ components relative to ad(H0)
- factorize: grouped, ordered Schur factorization Y = k (H0 + X) k*
- project_pi: the fibration onto the flag, Y -> Ad(k) H0
- kks_form: the real KKS form with the calibrated global sign
- spectral_frame: unitary diagonalizer of a Hermitian flag point
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Tuple, Union

import numpy as np
import scipy.linalg

from config.settings import SPECTRUM_TOL, WITHIN_BLOCK_TOL
from core.errors import (
    ContractViolation,
    DefectiveInputError,
    NotOnOrbitError,
)
from core.liealg import AlgebraCtx, real_pairing
from core.weylgrp import ThetaSet
from utils.linalg_utils import comm, dagger, scale_of

logger = logging.getLogger(__name__)


# ============================================================================
# DATA STRUCTURES
# ============================================================================

# diagonal entries closer than this (relative) are one eigenvalue
EQUAL_ENTRY_TOL = 1e-12


def _equal_tol(h: np.ndarray) -> float:
    return EQUAL_ENTRY_TOL * max(1.0, float(np.abs(h).max()))


@dataclass(frozen=True)
class Characteristic:
    """
    Characteristic element H0 = diag(h_1 >= ... >= h_n), traceless.

    Attributes:
        diagonal: The entries h_1, ..., h_n
    """
    diagonal: Tuple[float, ...]

    def __post_init__(self):
        h = np.asarray(self.diagonal, dtype=float)
        if h.size < 2:
            raise ContractViolation("a characteristic element needs n >= 2")
        if abs(h.sum()) > 1e-10 * max(1.0, np.abs(h).max()):
            raise ContractViolation(f"diagonal {self.diagonal} is not traceless")
        if np.any(np.diff(h) > _equal_tol(h)):
            raise ContractViolation(f"diagonal {self.diagonal} is not weakly decreasing")
        if np.allclose(h, 0.0):
            raise ContractViolation("H0 = 0 has a trivial orbit")

    @classmethod
    def from_diagonal(cls, h: Sequence[float]) -> "Characteristic":
        return cls(tuple(float(x) for x in h))

    @classmethod
    def from_theta(cls, n: int, theta: ThetaSet, step: float = 2.0) -> "Characteristic":
        """
        Canonical characteristic element of a flag type.

        Simple roots outside theta take the value `step` on H0, those in theta vanish.
        For n = 2, theta = {} this is diag(1, -1).
        """
        theta.validate(n)
        h = np.zeros(n)
        for k in range(1, n):
            if k not in theta.indices:
                h[:k] += step
        h -= h.mean()
        return cls.from_diagonal(h)

    def dual(self) -> "Characteristic":
        """Characteristic of the dual flag: eigenvalues of -H0 re-sorted."""
        return Characteristic(tuple(sorted((-x for x in self.diagonal), reverse=True)))

    @property
    def n(self) -> int:
        return len(self.diagonal)

    @cached_property
    def h(self) -> np.ndarray:
        return np.asarray(self.diagonal, dtype=float)

    @cached_property
    def H0(self) -> np.ndarray:
        return np.diag(self.h).astype(complex)

    @cached_property
    def theta(self) -> ThetaSet:
        tol = _equal_tol(self.h)
        return ThetaSet(frozenset(k for k in range(1, self.n) if self.h[k - 1] - self.h[k] <= tol))

    @cached_property
    def block_sizes(self) -> Tuple[int, ...]:
        sizes = [1]
        for k in range(1, self.n):
            if k in self.theta.indices:
                sizes[-1] += 1
            else:
                sizes.append(1)
        return tuple(sizes)

    @cached_property
    def block_of(self) -> np.ndarray:
        return np.repeat(np.arange(len(self.block_sizes)), self.block_sizes)

    @cached_property
    def eigenvalues(self) -> np.ndarray:
        """Distinct eigenvalues, one per block, decreasing."""
        starts = np.cumsum((0,) + self.block_sizes[:-1])
        return self.h[starts]

    @cached_property
    def upper_mask(self) -> np.ndarray:
        b = self.block_of
        return b[:, None] < b[None, :]

    @cached_property
    def lower_mask(self) -> np.ndarray:
        return self.upper_mask.T

    @cached_property
    def zero_mask(self) -> np.ndarray:
        b = self.block_of
        return b[:, None] == b[None, :]

    @cached_property
    def gaps(self) -> np.ndarray:
        """D[i, j] = h_j - h_i, so [C, H0] = C * D entrywise."""
        return self.h[None, :] - self.h[:, None]

    @property
    def dim_nplus(self) -> int:
        """Complex dimension of n+, equal to the complex dimension of the flag."""
        return int(self.upper_mask.sum())

    @property
    def is_regular(self) -> bool:
        return not self.theta.indices


@dataclass(frozen=True, eq=False)
class OrbitPoint:
    """
    Point of Ad(G) H0 with its factorization Y = k (H0 + X) k*.

    Attributes:
        Y: Traceless complex matrix on the orbit
        k: Unitary, det 1
        X: Element of n+ (strictly block upper)
    """
    Y: np.ndarray
    k: np.ndarray
    X: np.ndarray


OrbitLike = Union[np.ndarray, OrbitPoint]


# ============================================================================
# FRAMES
# ============================================================================

def to_frame(k: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Ad(k*) M."""
    return dagger(k) @ M @ k


def from_frame(k: np.ndarray, M: np.ndarray) -> np.ndarray:
    """Ad(k) M."""
    return k @ M @ dagger(k)


def _fix_determinant(k: np.ndarray) -> np.ndarray:
    d = np.linalg.det(k)
    k = k.copy()
    k[:, 0] *= np.conj(d) / abs(d)
    return k


def spectral_frame(ch: Characteristic, x: np.ndarray, tol: float = SPECTRUM_TOL) -> np.ndarray:
    """
    Unitary det-1 k with x = Ad(k) H0 for a Hermitian flag point x.

    The Hermitian part of x is diagonalized; eigenvalues are matched to H0
    in decreasing order. Columns inside a block are determined only up to
    U(block), which every caller is invariant under.

    Raises:
        NotOnOrbitError: If the spectrum differs from H0 by more than tol
    """
    x = np.asarray(x, dtype=complex)
    if x.shape != (ch.n, ch.n):
        raise ContractViolation(f"shape {x.shape} does not match n={ch.n}")
    herm = (x + dagger(x)) / 2
    values, vectors = scipy.linalg.eigh(herm)
    values, vectors = values[::-1], vectors[:, ::-1]
    deviation = np.max(np.abs(values - ch.h))
    if deviation > tol * scale_of(x):
        raise NotOnOrbitError(f"flag spectrum deviates by {deviation:.2e}")
    return _fix_determinant(vectors)


# ============================================================================
# PARABOLIC DATA
# ============================================================================

def parabolic_split(ch: Characteristic, Z: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Components of Z in n-, z and n+.

    Args:
        ch: Characteristic element
        Z: Traceless complex matrix

    Returns:
        (Zminus, Zzero, Zplus), supported below / on / above the block diagonal

    Example:
        >>> ch = Characteristic.from_diagonal([1, -1])
        >>> parabolic_split(ch, np.array([[0, 1], [0, 0]]))[2]
        array([[0.+0.j, 1.+0.j],
               [0.+0.j, 0.+0.j]])
    """
    Z = np.asarray(Z, dtype=complex)
    if Z.shape != (ch.n, ch.n):
        raise ContractViolation(f"shape {Z.shape} does not match n={ch.n}")
    return Z * ch.lower_mask, Z * ch.zero_mask, Z * ch.upper_mask


# ============================================================================
# FACTORIZATION
# ============================================================================

def _swap_adjacent(T: np.ndarray, U: np.ndarray, p: int) -> None:
    """Exchange the diagonal entries p, p+1 of an upper-triangular T in place."""
    a, b, c = T[p, p], T[p + 1, p + 1], T[p, p + 1]
    v = np.array([c, b - a])
    v /= np.linalg.norm(v)
    G = np.array([[v[0], -np.conj(v[1])], [v[1], np.conj(v[0])]])
    T[:, p:p + 2] = T[:, p:p + 2] @ G
    T[p:p + 2, :] = dagger(G) @ T[p:p + 2, :]
    U[:, p:p + 2] = U[:, p:p + 2] @ G
    T[p + 1, p] = 0.0


def _ordered_schur(ch: Characteristic, Y: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    T, U = scipy.linalg.schur(Y, output="complex")
    scale = scale_of(Y)

    # nearest block for each computed eigenvalue
    diag = np.diag(T)
    keys = np.argmin(np.abs(diag[:, None] - ch.eigenvalues[None, :]), axis=1)
    counts = np.bincount(keys, minlength=len(ch.block_sizes))
    if tuple(counts) != ch.block_sizes:
        raise NotOnOrbitError(f"eigenvalues {np.round(diag, 6)} do not match {ch.diagonal}")
    deviation = np.max(np.abs(diag - ch.eigenvalues[keys]))
    if deviation > SPECTRUM_TOL * scale:
        raise NotOnOrbitError(f"spectrum deviates by {deviation:.2e}")

    # bubble sort into chamber order by unitary swaps
    swapped = True
    while swapped:
        swapped = False
        for p in range(ch.n - 1):
            if keys[p] > keys[p + 1]:
                _swap_adjacent(T, U, p)
                keys[p], keys[p + 1] = keys[p + 1], keys[p]
                swapped = True
    return T, U


def factorize(ch: Characteristic, Y: OrbitLike) -> OrbitPoint:
    """
    Factor an orbit point as Y = k (H0 + X) k*.

    Args:
        ch: Characteristic element
        Y: Traceless matrix diagonalizable with the spectrum of H0

    Returns:
        OrbitPoint with k unitary det 1 and X in n+

    Raises:
        NotOnOrbitError: On spectrum mismatch
        DefectiveInputError: If Y is not diagonalizable within tolerance
    """
    if isinstance(Y, OrbitPoint):
        return Y
    Y = np.asarray(Y, dtype=complex)
    if Y.shape != (ch.n, ch.n):
        raise ContractViolation(f"shape {Y.shape} does not match n={ch.n}")

    _, U = _ordered_schur(ch, Y)
    k = _fix_determinant(U)
    T = to_frame(k, Y)
    scale = scale_of(Y)

    within = T * ch.zero_mask - ch.H0
    diag_dev = np.max(np.abs(np.diag(within)))
    if diag_dev > SPECTRUM_TOL * scale:
        raise NotOnOrbitError(f"diagonal deviates by {diag_dev:.2e}")
    block_dev = np.max(np.abs(within - np.diag(np.diag(within))))
    if block_dev > WITHIN_BLOCK_TOL * scale:
        raise DefectiveInputError(f"within-block residual {block_dev:.2e}")

    return OrbitPoint(Y=Y, k=k, X=T * ch.upper_mask)


def as_orbit_point(ch: Characteristic, Y: OrbitLike) -> OrbitPoint:
    """Accept either a raw matrix or a cached OrbitPoint."""
    return Y if isinstance(Y, OrbitPoint) else factorize(ch, Y)


def recompose(ch: Characteristic, p: OrbitPoint) -> np.ndarray:
    """k (H0 + X) k*."""
    return from_frame(p.k, ch.H0 + p.X)


def project_pi(ch: Characteristic, Y: OrbitLike) -> np.ndarray:
    """
    Fibration onto the flag in the Hermitian model.

    Returns:
        Ad(k) H0, constant along each affine fibre Ad(k)(H0 + n+)
    """
    p = as_orbit_point(ch, Y)
    return from_frame(p.k, ch.H0)


# ============================================================================
# SYMPLECTIC FORM
# ============================================================================

def kks_form(ctx: AlgebraCtx, ch: Characteristic, Y: OrbitLike, Z1: np.ndarray, Z2: np.ndarray) -> float:
    """
    Real KKS form on the tangents [Z1, Y], [Z2, Y].

    Args:
        ctx: Algebra context carrying the calibrated sign
        ch: Characteristic element (shape check)
        Y: Orbit point
        Z1, Z2: Algebra elements inducing the tangents

    Returns:
        s * Re B(Y, [Z1, Z2])
    """
    Y = Y.Y if isinstance(Y, OrbitPoint) else np.asarray(Y, dtype=complex)
    if Y.shape != (ch.n, ch.n):
        raise ContractViolation(f"shape {Y.shape} does not match n={ch.n}")
    return ctx.kks_sign * real_pairing(ctx, Y, comm(Z1, Z2))
