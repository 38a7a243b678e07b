"""
The open orbit in F_Theta x F_Theta*.

Flags are nested subspaces given by orthonormal column frames. The orbit
O(H0) embeds as the pairs of transversal flags, Y -> (sums of eigenspaces
in decreasing order, sums of eigenspaces in increasing order).

This module provides:
- NestedFlag / FlagPair with validation
- embed, transversal, act_pair, orbit_to_pair
- product_complex_structure_residual and the product isotropy certificate
- the SL(2) dictionary: pair_to_matrix_sl2, hermitian_of_line_sl2, line maps and fixed lines
"""

import logging
from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np
import scipy.linalg

from config.settings import TRANSVERSAL_TOL
from core.cotangent import induced_field
from core.errors import ContractViolation, NotTransversalError
from core.lagrangian import complex_structure
from core.liealg import build_context
from core.orbit import Characteristic, OrbitLike, factorize, from_frame
from core.weylgrp import ThetaSet, all_elements, representative
from utils.linalg_utils import dagger, norm, same_line, stack_real

logger = logging.getLogger(__name__)

LineMap = Callable[[np.ndarray], np.ndarray]


# ============================================================================
# DATA STRUCTURES
# ============================================================================

@dataclass(frozen=True, eq=False)
class NestedFlag:
    """
    Increasing chain of subspaces of C^n.

    Attributes:
        subspaces: Orthonormal column frames, strictly increasing dimensions
    """
    subspaces: Tuple[np.ndarray, ...]

    def __post_init__(self):
        dims = [V.shape[1] for V in self.subspaces]
        if any(b <= a for a, b in zip(dims, dims[1:])):
            raise ContractViolation(f"subspace dimensions {dims} are not increasing")
        for V in self.subspaces:
            if norm(dagger(V) @ V - np.eye(V.shape[1])) > 1e-10:
                raise ContractViolation("subspace frame is not orthonormal")
        for V, W in zip(self.subspaces, self.subspaces[1:]):
            if norm(V - W @ (dagger(W) @ V)) > 1e-9:
                raise ContractViolation("subspaces are not nested")

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(V.shape[1] for V in self.subspaces)

    def to_json(self) -> list:
        return list(self.subspaces)


@dataclass(frozen=True, eq=False)
class FlagPair:
    """
    Point of F_Theta x F_Theta*.

    Attributes:
        first: Flag of type Theta
        second: Flag of type Theta*
    """
    first: NestedFlag
    second: NestedFlag


# ============================================================================
# FLAG CONSTRUCTION
# ============================================================================

def flag_dims(ch: Characteristic) -> Tuple[int, ...]:
    """Dimensions of the proper subspaces of a flag of type ch."""
    return tuple(int(d) for d in np.cumsum(ch.block_sizes)[:-1])


def _flag_from_columns(M: np.ndarray, dims: Tuple[int, ...]) -> NestedFlag:
    Q, _ = scipy.linalg.qr(M)
    return NestedFlag(tuple(Q[:, :d] for d in dims))


def embed(ch: Characteristic, g: np.ndarray) -> FlagPair:
    """
    (g.x0, g.w0~y0) for the coordinate flag x0 and the reversed coordinate flag.

    Args:
        ch: Characteristic of the first flag type
        g: Invertible n x n matrix

    Returns:
        FlagPair with re-orthonormalized frames

    Example:
        >>> ch = Characteristic.from_diagonal([1, -1])
        >>> pair = embed(ch, np.eye(2))
        >>> pair.first.subspaces[0].ravel(), pair.second.subspaces[0].ravel()
        (array([1.+0.j, 0.+0.j]), array([0.+0.j, 1.+0.j]))
    """
    g = np.asarray(g, dtype=complex)
    if g.shape != (ch.n, ch.n):
        raise ContractViolation(f"g has shape {g.shape}, expected ({ch.n}, {ch.n})")
    if abs(np.linalg.det(g)) < 1e-12:
        raise ContractViolation("g is singular")

    first = _flag_from_columns(g, flag_dims(ch))
    second = _flag_from_columns(g[:, ::-1], flag_dims(ch.dual()))
    return FlagPair(first=first, second=second)


def act_pair(g: np.ndarray, pair: FlagPair) -> FlagPair:
    """Diagonal action of g on a pair of flags."""
    g = np.asarray(g, dtype=complex)

    def move(flag: NestedFlag) -> NestedFlag:
        return _flag_from_columns(g @ _nested_basis(flag), flag.dims)

    return FlagPair(first=move(pair.first), second=move(pair.second))


def _nested_basis(flag: NestedFlag) -> np.ndarray:
    """Columns whose leading blocks span the subspaces of the flag."""
    columns = flag.subspaces[0]
    for V in flag.subspaces[1:]:
        extra = V - columns @ (dagger(columns) @ V)
        Q, _ = scipy.linalg.qr(extra, mode="economic")
        columns = np.hstack([columns, Q[:, : V.shape[1] - columns.shape[1]]])
    return columns


def transversal(pair: FlagPair, tol: float = TRANSVERSAL_TOL) -> bool:
    """
    Whether every complementary pair V_i, W_j (dim V_i + dim W_j = n) meets only in 0.

    Tested by the smallest singular value of [V_i | W_j].
    """
    n = pair.first.subspaces[0].shape[0]
    by_dim = {W.shape[1]: W for W in pair.second.subspaces}
    for V in pair.first.subspaces:
        W = by_dim.get(n - V.shape[1])
        if W is None:
            raise ContractViolation("flag types are not dual to each other")
        if scipy.linalg.svdvals(np.hstack([V, W]))[-1] < tol:
            return False
    return True


def orbit_to_pair(ch: Characteristic, Y: OrbitLike) -> FlagPair:
    """
    Flags of eigenspace sums of Y, decreasing and increasing eigenvalue order.

    Raises:
        NotOnOrbitError: If the spectrum of Y differs from H0
    """
    Y_mat = Y.Y if hasattr(Y, "Y") else np.asarray(Y, dtype=complex)
    first = factorize(ch, Y_mat).k
    second = factorize(ch.dual(), -Y_mat).k
    return FlagPair(
        first=NestedFlag(tuple(first[:, :d] for d in flag_dims(ch))),
        second=NestedFlag(tuple(second[:, :d] for d in flag_dims(ch.dual()))),
    )


def pair_distance(a: FlagPair, b: FlagPair) -> float:
    """Max projector distance between corresponding subspaces."""
    worst = 0.0
    for fa, fb in ((a.first, b.first), (a.second, b.second)):
        for V, W in zip(fa.subspaces, fb.subspaces):
            worst = max(worst, norm(V @ dagger(V) - W @ dagger(W)))
    return worst


def weyl_pair_census(n: int = 2) -> Tuple[int, int]:
    """
    Split the W x W orbit of coordinate flag pairs into (diagonal, transversal) counts.

    For n = 2 the four points split 2 / 2.
    """
    ch = Characteristic.from_theta(n, ThetaSet())
    diagonal = transversal_count = 0
    for w1 in all_elements(n):
        for w2 in all_elements(n):
            first = embed(ch, representative(w1)).first
            second = embed(ch, representative(w2)).second
            if transversal(FlagPair(first, second)):
                transversal_count += 1
            else:
                diagonal += 1
    return diagonal, transversal_count


# ============================================================================
# PRODUCT COMPLEX STRUCTURE
# ============================================================================

def _product_points(ch: Characteristic, Y: OrbitLike) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    Y_mat = Y.Y if hasattr(Y, "Y") else np.asarray(Y, dtype=complex)
    k1 = factorize(ch, Y_mat).k
    k2 = factorize(ch.dual(), -Y_mat).k
    return from_frame(k1, ch.H0), k1, from_frame(k2, ch.dual().H0), k2


def product_complex_structure_residual(ch: Characteristic, Y: OrbitLike, sign: float = 1.0) -> float:
    """
    Max ||dPsi(i V) + J_prod dPsi(V)|| over the orbit tangents V = [Z, Y].

    dPsi is evaluated exactly on induced fields: [Z, Y] -> (Z~(x1), Z~(x2)).
    sign = -1 flips J_prod (negative control).
    """
    ctx = build_context(ch.n)
    dual = ch.dual()
    x1, k1, x2, k2 = _product_points(ch, Y)
    worst = 0.0
    for Z in ctx.basis:
        parts = (
            (ch, x1, k1),
            (dual, x2, k2),
        )
        total = 0.0
        for c, x, k in parts:
            moved = induced_field(c, Z, k)
            moved_i = induced_field(c, 1j * Z, k)
            total += norm(moved_i + sign * complex_structure(c, x, moved)) ** 2
        worst = max(worst, float(np.sqrt(total)))
    return worst


def product_isotropy(ch: Characteristic) -> Tuple[int, float]:
    """
    Kernel of Z -> dPsi(Z~) at the origin pair (H0, -H0).

    Returns:
        (real kernel dimension, largest off-block component of a kernel vector)
    """
    ctx = build_context(ch.n)
    dual = ch.dual()
    x1, k1, x2, k2 = _product_points(ch, ch.H0)
    columns = stack_real(
        np.concatenate([induced_field(ch, Z, k1).ravel(), induced_field(dual, Z, k2).ravel()])
        for Z in ctx.real_basis
    )
    _, s, Vh = scipy.linalg.svd(columns)
    rank = int(np.sum(s > 1e-8 * s[0]))
    kernel = Vh[rank:]
    leak = 0.0
    basis = np.array(ctx.real_basis)
    for row in kernel:
        Z = np.tensordot(row, basis, axes=1)
        leak = max(leak, norm(Z * ~ch.zero_mask))
    return kernel.shape[0], leak


# ============================================================================
# SL(2) DICTIONARY
# ============================================================================

def _line(xi) -> np.ndarray:
    v = np.asarray(xi, dtype=complex).ravel()
    if v.shape != (2,):
        raise ContractViolation("a line of C^2 needs two coordinates")
    if norm(v) == 0:
        raise ContractViolation("the zero vector spans no line")
    return v


def pair_to_matrix_sl2(xi, eta) -> np.ndarray:
    """
    Matrix with +1-eigenline xi and -1-eigenline eta.

    With xi = (x, y), eta = (z, w) scaled so that xw - yz = 1:
        [[wx + yz, -2xz], [2yw, -wx - yz]]

    Raises:
        NotTransversalError: If xi and eta span the same line
    """
    xi, eta = _line(xi), _line(eta)
    det = xi[0] * eta[1] - xi[1] * eta[0]
    if abs(det) < TRANSVERSAL_TOL * norm(xi) * norm(eta):
        raise NotTransversalError("not transversal")
    x, y = xi / det
    z, w = eta
    return np.array([[w * x + y * z, -2 * x * z], [2 * y * w, -w * x - y * z]])


def hermitian_of_line_sl2(xi) -> np.ndarray:
    """
    Hermitian matrix of a line, [[|x|^2 - |y|^2, 2x conj(y)], [2 conj(x) y, |y|^2 - |x|^2]].

    The line itself is the +1 eigenline.
    """
    x, y = _line(xi) / norm(_line(xi))
    return np.array([
        [abs(x) ** 2 - abs(y) ** 2, 2 * x * np.conj(y)],
        [2 * np.conj(x) * y, abs(y) ** 2 - abs(x) ** 2],
    ])


def sl2_rotation(xi) -> np.ndarray:
    """r: (x, y) -> (-y, x)."""
    x, y = _line(xi)
    return np.array([-y, x])


def sl2_antipodal(xi) -> np.ndarray:
    """R_{w0} on lines: (x, y) -> (-conj(y), conj(x)), the orthogonal line."""
    x, y = _line(xi)
    return np.array([-np.conj(y), np.conj(x)])


def sl2_torus_reflection(xi) -> np.ndarray:
    """m o R_{w0} with m = diag(i, -i): (x, y) -> (conj(y), conj(x)) as lines."""
    x, y = _line(xi)
    return np.array([np.conj(y), np.conj(x)])


def sl2_graph_matrix(line_map: LineMap, xi) -> np.ndarray:
    """Orbit matrix of the graph point (xi, map(xi))."""
    return pair_to_matrix_sl2(xi, line_map(xi))


def fixed_line_defect(line_map: LineMap, xi) -> float:
    return same_line(line_map(xi), xi)


def cp1_grid(count: int = 100) -> List[np.ndarray]:
    """count lines (cos t, e^{ip} sin t) on a product grid, poles excluded."""
    side = int(np.ceil(np.sqrt(count)))
    lines = []
    for a in range(side):
        t = (a + 0.5) * np.pi / (2 * side)
        for b in range(side):
            p = 2 * np.pi * b / side
            lines.append(np.array([np.cos(t), np.exp(1j * p) * np.sin(t)]))
    return lines[:count]


def fixed_line_scan(
    line_map: LineMap,
    known: List[np.ndarray],
    count: int = 100,
    radius: float = 0.05,
    floor: float = 1e-6,
) -> Tuple[float, int]:
    """
    Certify the fixed lines of a map on a grid of CP^1.

    Returns:
        (largest defect at the known lines, number of grid lines farther than
        radius from every known line whose defect is below floor)
    """
    at_known = max(fixed_line_defect(line_map, xi) for xi in known)
    spurious = 0
    for xi in cp1_grid(count):
        distance = min(np.sqrt(max(same_line(xi, f), 0.0)) for f in known)
        if distance > radius and fixed_line_defect(line_map, xi) < floor:
            spurious += 1
    return at_known, spurious
