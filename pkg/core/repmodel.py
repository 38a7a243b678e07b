"""
Exterior-power representations and the representation moment map.

Lambda^k C^n realizes the fundamental weight mu_k. Elements of the orbit of
v0 (x) eps0 are rank-one endomorphisms v (x) eps with eps(v) != 0, and

    <M(v (x) eps), Z> = eps(rho(Z) v)

defines the equivariant moment map M onto the adjoint orbit of H_mu.

This module provides:
- ExteriorRep / exterior_rep: basis, derivation action, compound-minor group action
- rep_algebra, dual_action, rep_group, dual_group
- moment_rep (Gram solve, cross-checked against the trace-form projection)
- height_rep, phi, phi_inv, rep_to_cotangent
- plucker_vector, flag_covector: Pluecker data of subspace frames
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, Tuple

import numpy as np
import scipy.linalg

from core.cotangent import CotangentPoint
from core.errors import (
    ContractViolation,
    InternalConsistencyError,
    NotTransversalError,
)
from core.liealg import AlgebraCtx, iwasawa, solve_complex_dual
from core.orbit import Characteristic, from_frame
from utils.linalg_utils import dagger, norm, normalize_phase, scale_of

logger = logging.getLogger(__name__)


# ============================================================================
# DATA STRUCTURES
# ============================================================================

@dataclass(frozen=True, eq=False)
class ExteriorRep:
    """
    The k-th exterior power of C^n.

    Attributes:
        n: Matrix size
        k: Degree, 1 <= k <= n-1
        basis_index: Increasing k-subsets of {0..n-1}, lexicographic
        unit_actions: rho(E_ij) for every (i, j)
    """
    n: int
    k: int
    basis_index: Tuple[Tuple[int, ...], ...]
    unit_actions: Dict[Tuple[int, int], np.ndarray]

    @property
    def dim(self) -> int:
        return len(self.basis_index)

    def position(self, subset: Tuple[int, ...]) -> int:
        return self.basis_index.index(tuple(subset))


@dataclass(frozen=True, eq=False)
class RepElement:
    """
    Decomposable tensor v (x) eps in V (x) V*.

    Attributes:
        v: Vector of Lambda^k C^n
        eps: Covector, as coefficients on the dual basis
    """
    v: np.ndarray
    eps: np.ndarray

    def pairing(self) -> complex:
        """eps(v), bilinear."""
        return complex(self.eps @ self.v)

    def as_matrix(self) -> np.ndarray:
        """The endomorphism u -> eps(u) v."""
        return np.outer(self.v, self.eps)


# ============================================================================
# CONSTRUCTION
# ============================================================================

def _slot_replacement(subset: Tuple[int, ...], old: int, new: int) -> Tuple[int, Tuple[int, ...]]:
    """Sign and sorted subset of e_S after replacing the factor e_old by e_new."""
    replaced = [new if s == old else s for s in subset]
    # sign of the permutation that sorts the wedge factors
    inversions = sum(1 for a in range(len(replaced)) for b in range(a + 1, len(replaced))
                     if replaced[a] > replaced[b])
    return (-1) ** inversions, tuple(sorted(replaced))


@lru_cache(maxsize=None)
def exterior_rep(n: int, k: int) -> ExteriorRep:
    """
    Build Lambda^k C^n with its basis action cache.

    Args:
        n: Matrix size
        k: Degree

    Returns:
        ExteriorRep

    Raises:
        ContractViolation: If k is outside [1, n-1]
    """
    if n < 2 or not 1 <= k <= n - 1:
        raise ContractViolation(f"exterior degree k={k} is invalid for n={n}")

    index = tuple(combinations(range(n), k))
    position = {S: p for p, S in enumerate(index)}
    actions: Dict[Tuple[int, int], np.ndarray] = {}

    for i in range(n):
        for j in range(n):
            R = np.zeros((len(index), len(index)), dtype=complex)
            for col, S in enumerate(index):
                if j not in S:
                    continue
                if i == j:
                    R[col, col] = 1.0
                elif i not in S:
                    sign, target = _slot_replacement(S, j, i)
                    R[position[target], col] = sign
            actions[(i, j)] = R

    logger.debug(f"Built Lambda^{k} C^{n}: dim={len(index)}")
    return ExteriorRep(n=n, k=k, basis_index=index, unit_actions=actions)


def _require_matrix(rep: ExteriorRep, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=complex)
    if X.shape != (rep.n, rep.n):
        raise ContractViolation(f"expected shape ({rep.n}, {rep.n}), got {X.shape}")
    return X


def _require_vector(rep: ExteriorRep, v: np.ndarray, name: str) -> np.ndarray:
    v = np.asarray(v, dtype=complex).ravel()
    if v.size != rep.dim:
        raise ContractViolation(f"{name} has length {v.size}, expected {rep.dim}")
    return v


# ============================================================================
# ACTIONS
# ============================================================================

def rep_algebra(rep: ExteriorRep, X: np.ndarray) -> np.ndarray:
    """
    Derivation action rho(X) = sum_ij X_ij rho(E_ij).

    Example:
        >>> rep = exterior_rep(3, 2)
        >>> E12 = np.zeros((3, 3)); E12[0, 1] = 1
        >>> rho = rep_algebra(rep, E12)
        >>> rho[rep.position((0, 2)), rep.position((1, 2))]
        (1+0j)
    """
    X = _require_matrix(rep, X)
    out = np.zeros((rep.dim, rep.dim), dtype=complex)
    for (i, j), R in rep.unit_actions.items():
        if X[i, j] != 0:
            out += X[i, j] * R
    return out


def dual_action(rep: ExteriorRep, X: np.ndarray) -> np.ndarray:
    """rho*(X) eps = -eps o rho(X), i.e. -rho(X)^T on coefficients."""
    return -rep_algebra(rep, X).T


def rep_group(rep: ExteriorRep, g: np.ndarray) -> np.ndarray:
    """Group action on Lambda^k: the k-th compound matrix of g."""
    g = _require_matrix(rep, g)
    out = np.zeros((rep.dim, rep.dim), dtype=complex)
    for col, S in enumerate(rep.basis_index):
        for row, T in enumerate(rep.basis_index):
            out[row, col] = np.linalg.det(g[np.ix_(T, S)])
    return out


def dual_group(rep: ExteriorRep, g: np.ndarray) -> np.ndarray:
    """Contragredient action rho(g)^{-T}."""
    return scipy.linalg.inv(rep_group(rep, g)).T


def highest_weight_vector(rep: ExteriorRep) -> np.ndarray:
    """v0 = e_1 ^ ... ^ e_k."""
    v = np.zeros(rep.dim, dtype=complex)
    v[rep.position(tuple(range(rep.k)))] = 1.0
    return v


def lowest_weight_covector(rep: ExteriorRep) -> np.ndarray:
    """eps0, the dual-basis covector of v0; annihilated by the negative root spaces."""
    return highest_weight_vector(rep)


def base_element(rep: ExteriorRep) -> RepElement:
    return RepElement(v=highest_weight_vector(rep), eps=lowest_weight_covector(rep))


def act_element(rep: ExteriorRep, g: np.ndarray, el: RepElement) -> RepElement:
    """g.(v (x) eps) = rho(g)v (x) rho*(g)eps."""
    return RepElement(v=rep_group(rep, g) @ el.v, eps=dual_group(rep, g) @ el.eps)


def lowered_base_element(rep: ExteriorRep) -> RepElement:
    """
    exp(E_{k+1,k}) applied to v0 (x) eps0.

    The push tilts the last factor of v0 towards e_{k+1} and fixes eps0, so
    the result is an orbit element whose eps is not the Hermitian dual of v.
    """
    E = np.zeros((rep.n, rep.n), dtype=complex)
    E[rep.k, rep.k - 1] = 1.0
    return act_element(rep, scipy.linalg.expm(E), base_element(rep))


def act_element_algebra(rep: ExteriorRep, Z: np.ndarray, el: RepElement) -> np.ndarray:
    """Infinitesimal action rho(Z)v (x) eps + v (x) rho*(Z)eps, as a matrix."""
    return (np.outer(rep_algebra(rep, Z) @ el.v, el.eps)
            + np.outer(el.v, dual_action(rep, Z) @ el.eps))


# ============================================================================
# MOMENT MAP AND HEIGHT FUNCTIONS
# ============================================================================

def _functional_matrix(rep: ExteriorRep, el: RepElement) -> np.ndarray:
    """F[i, j] = eps(rho(E_ij) v)."""
    v = _require_vector(rep, el.v, "v")
    eps = _require_vector(rep, el.eps, "eps")
    F = np.zeros((rep.n, rep.n), dtype=complex)
    for (i, j), R in rep.unit_actions.items():
        F[i, j] = eps @ (R @ v)
    return F


def moment_rep(ctx: AlgebraCtx, rep: ExteriorRep, el: RepElement) -> np.ndarray:
    """
    Representation moment map M(v (x) eps).

    The Killing-Gram solve is cross-checked against the trace-form
    projection (F^T - tr(F)/n I) / 2n.

    Args:
        ctx: Algebra context of sl(n, C)
        rep: Exterior power
        el: Element v (x) eps

    Returns:
        Traceless n x n matrix

    Raises:
        InternalConsistencyError: If the two computations disagree
    """
    if ctx.n != rep.n:
        raise ContractViolation(f"context n={ctx.n} does not match rep n={rep.n}")

    F = _functional_matrix(rep, el)
    values = []
    for E in ctx.basis:
        i, j = np.argwhere(E != 0)[0]
        if i == j:
            values.append(F[i, i] - F[i + 1, i + 1])
        else:
            values.append(F[i, j])
    M = solve_complex_dual(ctx, np.array(values))

    projection = (F.T - (np.trace(F) / rep.n) * np.eye(rep.n)) / (2 * rep.n)
    gap = norm(M - projection)
    if gap > 1e-9 * scale_of(M, projection):
        raise InternalConsistencyError(f"moment map solves disagree by {gap:.2e}")
    return M


def height_rep(rep: ExteriorRep, el: RepElement, H: np.ndarray) -> complex:
    """
    Height function eps(rho(H) v), checked against tr((v (x) eps) rho(H)).

    Raises:
        InternalConsistencyError: If the two expressions differ by more than 1e-10
    """
    rho_H = rep_algebra(rep, H)
    direct = complex(el.eps @ (rho_H @ el.v))
    via_trace = complex(np.trace(el.as_matrix() @ rho_H))
    if abs(direct - via_trace) > 1e-10 * max(1.0, abs(direct)):
        raise InternalConsistencyError("height function expressions disagree")
    return direct


# ============================================================================
# PHI
# ============================================================================

def phi(el: RepElement) -> Tuple[np.ndarray, np.ndarray]:
    """
    Phi(v (x) eps) = ([v], [eps]), as phase-normalized unit representatives.

    Raises:
        ContractViolation: If v or eps vanishes
    """
    if norm(el.v) == 0 or norm(el.eps) == 0:
        raise ContractViolation("phi needs nonzero v and eps")
    return normalize_phase(el.v), normalize_phase(el.eps)


def phi_inv(pair: Tuple[np.ndarray, np.ndarray], normalization: complex = 1.0) -> RepElement:
    """
    Rebuild v (x) eps from its pair of lines with eps(v) = normalization.

    Raises:
        NotTransversalError: If eps(v) = 0 on the given lines
    """
    v = np.asarray(pair[0], dtype=complex).ravel()
    eps = np.asarray(pair[1], dtype=complex).ravel()
    value = eps @ v
    if abs(value) < 1e-12 * norm(v) * norm(eps):
        raise NotTransversalError("non-transversal pair, not in the orbit image")
    return RepElement(v=v, eps=eps * (normalization / value))


# ============================================================================
# COTANGENT REALIZATION
# ============================================================================

def rep_characteristic(ctx: AlgebraCtx, k: int) -> Characteristic:
    """
    Characteristic element H_mu of the k-th fundamental weight.

    The first k entries are (n-k)/(2n^2), the others -k/(2n^2); theta is
    every simple root except alpha_k.
    """
    n = ctx.n
    if not 1 <= k <= n - 1:
        raise ContractViolation(f"no fundamental weight mu_{k} for n={n}")
    h = np.array([(n - k) / (2 * n * n)] * k + [-k / (2 * n * n)] * (n - k))
    if np.max(np.abs(h - np.diag(ctx.fundamental_H[k - 1]).real)) > 1e-10:
        raise InternalConsistencyError(f"H_mu_{k} disagrees with the algebra context")
    return Characteristic.from_diagonal(h)


def _fundamental_index(ctx: AlgebraCtx, ch: Characteristic) -> int:
    for k, H_mu in enumerate(ctx.fundamental_H, start=1):
        if np.allclose(np.diag(H_mu).real, ch.h, atol=1e-12):
            return k
    raise ContractViolation(f"{ch.diagonal} is not a fundamental H_mu of sl({ctx.n})")


def rep_to_cotangent(ctx: AlgebraCtx, ch: Characteristic, g: np.ndarray) -> CotangentPoint:
    """
    Covector of g.(v0 (x) eps0) through the Iwasawa decomposition g = k p.

    Ad(p) H_mu = H_mu + X with X in n+, and the covector is Ad(k) X over Ad(k) H_mu.

    Raises:
        NotInSLError: If det(g) != 1
        InternalConsistencyError: If X leaves n+
    """
    _fundamental_index(ctx, ch)
    factors = iwasawa(g)
    p = factors.a @ factors.n_part
    X = p @ ch.H0 @ scipy.linalg.inv(p) - ch.H0

    leak = norm(X * ~ch.upper_mask)
    if leak > 1e-9 * scale_of(X):
        raise InternalConsistencyError(f"Ad(p)H_mu - H_mu leaves n+ by {leak:.2e}")

    k = factors.k
    return CotangentPoint(base=from_frame(k, ch.H0), W=from_frame(k, X * ch.upper_mask), k=k)


def isotropy_defect(rep: ExteriorRep, ctx: AlgebraCtx, ch: Characteristic) -> float:
    """Max norm of the infinitesimal action of z(H_mu) basis elements on v0 (x) eps0."""
    el = base_element(rep)
    worst = 0.0
    for Z in ctx.basis:
        i, j = np.argwhere(Z != 0)[0]
        if i != j and not ch.zero_mask[i, j]:
            continue
        worst = max(worst, norm(act_element_algebra(rep, Z, el)))
    return worst


# ============================================================================
# PLUECKER DATA
# ============================================================================

def plucker_vector(rep: ExteriorRep, frame: np.ndarray) -> np.ndarray:
    """Coordinates of the k-vector spanned by the n x k frame."""
    frame = np.asarray(frame, dtype=complex)
    if frame.shape != (rep.n, rep.k):
        raise ContractViolation(f"frame shape {frame.shape}, expected ({rep.n}, {rep.k})")
    return np.array([np.linalg.det(frame[list(S), :]) for S in rep.basis_index])


def flag_covector(rep: ExteriorRep, frame: np.ndarray) -> np.ndarray:
    """
    Covector u -> det[u | W] attached to an (n-k)-dimensional subspace W.

    It vanishes on k-vectors meeting W, so eps(v) != 0 exactly when V and W are transversal.
    """
    frame = np.asarray(frame, dtype=complex)
    if frame.shape != (rep.n, rep.n - rep.k):
        raise ContractViolation(f"frame shape {frame.shape}, expected ({rep.n}, {rep.n - rep.k})")
    eye = np.eye(rep.n, dtype=complex)
    return np.array([np.linalg.det(np.hstack([eye[:, list(S)], frame])) for S in rep.basis_index])


def hermitian_dual(v: np.ndarray) -> np.ndarray:
    """Coefficients of the covector u -> <u, v> for the induced Hermitian form."""
    return np.conj(np.asarray(v, dtype=complex))


def is_hermitian_moment(M: np.ndarray, tol: float = 1e-8) -> bool:
    return norm(M - dagger(M)) <= tol * scale_of(M)

