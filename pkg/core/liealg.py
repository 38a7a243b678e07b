"""
Concrete realization of sl(n, C).

This module provides:
- AlgebraCtx: immutable structure data (bases, roots, Killing Gram matrices)
- The Killing form B(X, Y) = 2n tr(XY) and its real part
- Cartan splitting Z = A + X into anti-Hermitian and Hermitian parts
- Iwasawa factorization g = k a n via QR
- Weyl basis vectors A_ij, Z_ij of the compact root planes

Index convention: roots are 0-based pairs (i, j) with alpha_ij(H) = h_i - h_j.
Simple-root indices in ThetaSet-like inputs are 1-based (alpha_k = (k-1, k)).
"""

import logging
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np
import scipy.linalg

from config.settings import DET_TOL
from core.errors import ContractViolation, InternalConsistencyError, NotInSLError
from utils.linalg_utils import comm

logger = logging.getLogger(__name__)


# ============================================================================
# DATA STRUCTURES
# ============================================================================

@dataclass(frozen=True, eq=False)
class AlgebraCtx:
    """
    Precomputed structure data of sl(n, C).

    Attributes:
        n: Matrix size
        basis: E_ij (i != j, lexicographic), then H_i = E_ii - E_{i+1,i+1}
        roots: All pairs (i, j), i != j, 0-based
        simple_roots: Pairs (i, i+1)
        real_basis: basis followed by i * basis (realification)
        killing_gram: Re B over real_basis
        complex_gram: B over basis
        fundamental_H: Killing duals of the fundamental weights
        kks_sign: Global sign relating the KKS form to the canonical form
    """
    n: int
    basis: Tuple[np.ndarray, ...]
    roots: Tuple[Tuple[int, int], ...]
    simple_roots: Tuple[Tuple[int, int], ...]
    real_basis: Tuple[np.ndarray, ...]
    killing_gram: np.ndarray
    complex_gram: np.ndarray
    fundamental_H: Tuple[np.ndarray, ...]
    kks_sign: int = 1
    _real_stack: np.ndarray = field(default=None, repr=False)
    _complex_stack: np.ndarray = field(default=None, repr=False)
    _gram_lu: tuple = field(default=None, repr=False)
    _complex_lu: tuple = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        """Complex dimension n^2 - 1."""
        return self.n * self.n - 1

    @property
    def cartan_basis(self) -> Tuple[np.ndarray, ...]:
        """H_1, ..., H_{n-1}."""
        return self.basis[self.n * (self.n - 1):]

    def with_sign(self, sign: int) -> "AlgebraCtx":
        """Copy of the context carrying a calibrated KKS sign."""
        return replace(self, kks_sign=int(sign))


@dataclass(frozen=True)
class IwasawaFactors:
    """
    Iwasawa factors g = k a n.

    Attributes:
        k: Unitary, det 1
        a: Positive real diagonal, det 1
        n_part: Upper unitriangular
    """
    k: np.ndarray
    a: np.ndarray
    n_part: np.ndarray

    def product(self) -> np.ndarray:
        return self.k @ self.a @ self.n_part


# ============================================================================
# CONSTRUCTION
# ============================================================================

def _unit(n: int, i: int, j: int) -> np.ndarray:
    E = np.zeros((n, n), dtype=complex)
    E[i, j] = 1.0
    return E


def _trace_products(stack_a: np.ndarray, stack_b: np.ndarray) -> np.ndarray:
    # tr(A_a B_b) for every pair
    return np.einsum("aij,bji->ab", stack_a, stack_b)


@lru_cache(maxsize=None)
def build_context(n: int, kks_sign: int = 1) -> AlgebraCtx:
    """
    Build the structure data of sl(n, C).

    Args:
        n: Matrix size, at least 2
        kks_sign: Sign stored for the KKS form (calibrated elsewhere)

    Returns:
        Immutable AlgebraCtx

    Raises:
        ContractViolation: If n < 2
    """
    if n < 2:
        raise ContractViolation(f"sl(n, C) needs n >= 2, got {n}")

    off_diagonal = [(i, j) for i in range(n) for j in range(n) if i != j]
    basis = [_unit(n, i, j) for i, j in off_diagonal]
    basis += [_unit(n, i, i) - _unit(n, i + 1, i + 1) for i in range(n - 1)]

    complex_stack = np.array(basis)
    real_stack = np.concatenate([complex_stack, 1j * complex_stack])

    complex_gram = 2 * n * _trace_products(complex_stack, complex_stack)
    killing_gram = (2 * n * _trace_products(real_stack, real_stack)).real

    cond = np.linalg.cond(killing_gram)
    if not np.isfinite(cond):
        raise InternalConsistencyError("Killing Gram matrix is singular")

    ctx = AlgebraCtx(
        n=n,
        basis=tuple(basis),
        roots=tuple(off_diagonal),
        simple_roots=tuple((i, i + 1) for i in range(n - 1)),
        real_basis=tuple(real_stack),
        killing_gram=killing_gram,
        complex_gram=complex_gram,
        fundamental_H=(),
        kks_sign=kks_sign,
        _real_stack=real_stack,
        _complex_stack=complex_stack,
        _gram_lu=scipy.linalg.lu_factor(killing_gram),
        _complex_lu=scipy.linalg.lu_factor(complex_gram),
    )

    fundamental = []
    for k in range(1, n):
        weights = np.array([1.0] * k + [0.0] * (n - k))
        H_mu = killing_dual_of_diagonal(ctx, weights)
        closed_form = (np.diag(weights) - (k / n) * np.eye(n)) / (2 * n)
        if np.max(np.abs(H_mu - closed_form)) > 1e-10:
            raise InternalConsistencyError(f"H_mu_{k} disagrees with its closed form")
        # stored exactly so that equal eigenvalues compare equal
        fundamental.append(closed_form.astype(complex))

    ctx = replace(ctx, fundamental_H=tuple(fundamental))
    logger.debug(f"Built sl({n}, C) context: dim={ctx.dim}, cond(Gram)={cond:.2e}")
    return ctx


# ============================================================================
# KILLING FORM
# ============================================================================

def _require_square(ctx: AlgebraCtx, *mats: np.ndarray) -> None:
    for M in mats:
        if np.shape(M) != (ctx.n, ctx.n):
            raise ContractViolation(
                f"expected a {ctx.n}x{ctx.n} matrix, got shape {np.shape(M)}"
            )


def killing(ctx: AlgebraCtx, X: np.ndarray, Y: np.ndarray) -> complex:
    """
    Killing form of sl(n, C).

    Args:
        ctx: Algebra context
        X: Traceless n x n matrix
        Y: Traceless n x n matrix

    Returns:
        B(X, Y) = 2n tr(XY)

    Raises:
        ContractViolation: On shape mismatch

    Example:
        >>> ctx = build_context(2)
        >>> killing(ctx, np.diag([1, -1]), np.diag([1, -1]))
        (8+0j)
    """
    _require_square(ctx, X, Y)
    return complex(2 * ctx.n * np.trace(np.asarray(X) @ np.asarray(Y)))


def real_pairing(ctx: AlgebraCtx, X: np.ndarray, Y: np.ndarray) -> float:
    """Re B(X, Y), the real pairing used for covectors and moment maps."""
    return killing(ctx, X, Y).real


def coordinates(ctx: AlgebraCtx, M: np.ndarray) -> np.ndarray:
    """Complex coordinates of a traceless matrix in ctx.basis."""
    n = ctx.n
    off = np.array([M[i, j] for i, j in ctx.roots], dtype=complex)
    # diag(M) = sum c_i (e_i - e_{i+1})  =>  c_i = partial sums
    diag_coeffs = np.cumsum(np.diag(M))[: n - 1]
    return np.concatenate([off, diag_coeffs])


def ad_matrix(ctx: AlgebraCtx, X: np.ndarray) -> np.ndarray:
    """Matrix of ad(X) in ctx.basis."""
    _require_square(ctx, X)
    return np.column_stack([coordinates(ctx, comm(X, b)) for b in ctx.basis])


def killing_via_ad(ctx: AlgebraCtx, X: np.ndarray, Y: np.ndarray) -> complex:
    """Killing form from its definition tr(ad X ad Y)."""
    return complex(np.trace(ad_matrix(ctx, X) @ ad_matrix(ctx, Y)))


# ============================================================================
# GRAM SOLVES
# ============================================================================

def real_values(ctx: AlgebraCtx, M: np.ndarray) -> np.ndarray:
    """Re B(M, r) for every r in the realified basis."""
    return (2 * ctx.n * np.einsum("ij,aji->a", M, ctx._real_stack)).real


def solve_real_dual(ctx: AlgebraCtx, values: Sequence[float]) -> np.ndarray:
    """
    Traceless m with Re B(m, r_a) = values[a] over the realified basis.

    Args:
        ctx: Algebra context
        values: One real number per realified basis element

    Returns:
        The unique traceless matrix with those pairings
    """
    coeffs = scipy.linalg.lu_solve(ctx._gram_lu, np.asarray(values, dtype=float))
    return np.tensordot(coeffs, ctx._real_stack, axes=1)


def solve_complex_dual(ctx: AlgebraCtx, values: Sequence[complex]) -> np.ndarray:
    """Traceless m with B(m, b) = values[b] over the complex basis."""
    coeffs = scipy.linalg.lu_solve(ctx._complex_lu, np.asarray(values, dtype=complex))
    return np.tensordot(coeffs, ctx._complex_stack, axes=1)


def killing_dual_of_diagonal(ctx: AlgebraCtx, weights: Sequence[float]) -> np.ndarray:
    """
    Killing dual of the functional H -> sum_i weights[i] h_i on the Cartan subalgebra.

    Args:
        ctx: Algebra context
        weights: n real coefficients (only differences matter)

    Returns:
        Real diagonal traceless H_w with Re B(H_w, H) = sum_i weights[i] h_i
    """
    weights = np.asarray(weights, dtype=float)
    cartan = np.array(ctx.cartan_basis).real
    gram = 2 * ctx.n * np.einsum("aij,bji->ab", cartan, cartan)
    rhs = np.array([weights @ np.diag(H) for H in cartan])
    coeffs = scipy.linalg.solve(gram, rhs, assume_a="sym")
    return np.tensordot(coeffs, cartan, axes=1).astype(complex)


def coroot_duality_matrix(ctx: AlgebraCtx) -> np.ndarray:
    """
    Matrix D[i, k] = 2 <alpha_i, mu_k> / <alpha_i, alpha_i> over simple roots.

    The inner product on functionals is transported from the Killing form;
    the result is the identity for the fundamental weights.
    """
    n = ctx.n
    D = np.zeros((n - 1, n - 1))
    for row, (i, j) in enumerate(ctx.simple_roots):
        w = np.zeros(n)
        w[i], w[j] = 1.0, -1.0
        H_alpha = killing_dual_of_diagonal(ctx, w)
        norm_sq = real_pairing(ctx, H_alpha, H_alpha)
        for col, H_mu in enumerate(ctx.fundamental_H):
            D[row, col] = 2 * real_pairing(ctx, H_alpha, H_mu) / norm_sq
    return D


# ============================================================================
# DECOMPOSITIONS
# ============================================================================

def cartan_split(Z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Split Z into anti-Hermitian and Hermitian parts.

    Args:
        Z: Traceless complex matrix

    Returns:
        (A, X) with A = (Z - Z*)/2, X = (Z + Z*)/2
    """
    Z = np.asarray(Z, dtype=complex)
    if Z.ndim != 2 or Z.shape[0] != Z.shape[1]:
        raise ContractViolation(f"expected a square matrix, got shape {Z.shape}")
    Zh = Z.conj().T
    return (Z - Zh) / 2, (Z + Zh) / 2


def iwasawa(g: np.ndarray) -> IwasawaFactors:
    """
    Iwasawa factorization g = k a n of an element of SL(n, C).

    Args:
        g: Complex matrix with det(g) = 1

    Returns:
        IwasawaFactors with k unitary, a positive diagonal, n unitriangular

    Raises:
        NotInSLError: If g is singular or det(g) != 1
    """
    g = np.asarray(g, dtype=complex)
    det = np.linalg.det(g)
    if not np.isfinite(det) or abs(det - 1.0) > DET_TOL:
        raise NotInSLError(f"det = {det:.3e}")

    Q, R = scipy.linalg.qr(g)
    diag = np.diag(R)
    phases = diag / np.abs(diag)
    k = Q * phases[np.newaxis, :]
    R = phases.conj()[:, np.newaxis] * R
    moduli = np.abs(diag)
    return IwasawaFactors(
        k=k,
        a=np.diag(moduli).astype(complex),
        n_part=R / moduli[:, np.newaxis],
    )


# ============================================================================
# BASES
# ============================================================================

def weyl_basis_vectors(ctx: AlgebraCtx, root: Tuple[int, int]) -> Tuple[np.ndarray, np.ndarray]:
    """
    Compact root-plane vectors for a positive root.

    Args:
        ctx: Algebra context
        root: (i, j) with i < j, 0-based

    Returns:
        (A, Z) = (E_ij - E_ji, i (E_ij + E_ji)), both anti-Hermitian

    Raises:
        ContractViolation: If i >= j
    """
    i, j = root
    if not 0 <= i < j < ctx.n:
        raise ContractViolation(f"root {root} is not a positive root of sl({ctx.n})")
    E_ij, E_ji = _unit(ctx.n, i, j), _unit(ctx.n, j, i)
    return E_ij - E_ji, 1j * (E_ij + E_ji)


def root_plane_vectors(n: int, root: Tuple[int, int]) -> Tuple[np.ndarray, np.ndarray]:
    """A_alpha = E_ij - E_ji and Z_alpha = i(E_ij + E_ji) for any root, positive or not."""
    i, j = root
    E_ij, E_ji = _unit(n, i, j), _unit(n, j, i)
    return E_ij - E_ji, 1j * (E_ij + E_ji)


def compact_basis(ctx: AlgebraCtx) -> Tuple[np.ndarray, ...]:
    """Real basis of su(n): root-plane vectors A, Z for i < j, then i H_k."""
    out = []
    for i in range(ctx.n):
        for j in range(i + 1, ctx.n):
            out.extend(weyl_basis_vectors(ctx, (i, j)))
    out.extend(1j * H for H in ctx.cartan_basis)
    return tuple(out)
