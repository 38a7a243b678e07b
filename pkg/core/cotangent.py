"""
Cotangent model of a flag manifold.

A covector at the flag point x = Ad(k) H0 is stored as a momentum matrix
W in Ad(k) n+; it pairs with a tangent vector v through the Ad(k) n-
representative N(v) of v:  xi(v) = Re B(W, N(v)).

This module provides:
- iota / iota_inverse: the diffeomorphism between the orbit and T*F
- energy and mu: energy functions and the moment map (Gram solve)
- lifted_field, vertical_field, theta_field: infinitesimal action (plus / minus)
- act, flow: exact transported action and RK4 integration of theta
- cocycle: mu(g xi) - Ad(g) mu(xi)
- tautological_form, canonical_two_form: lambda and Omega = -d lambda
- calibrate_kks_sign / calibrated_context

Induced fields are generators of the left action, Z~(x) = d/dt exp(tZ).x.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Literal, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from config.settings import (
    FD_STEP,
    FLOW_DRIFT_TOL,
    FLOW_DT,
    LSTSQ_TOL,
    SPECTRUM_TOL,
    STAGE_SPECTRUM_TOL,
)
from core.errors import (
    InternalConsistencyError,
    IntegrationDivergedError,
    NotTangentError,
)
from core.liealg import (
    AlgebraCtx,
    build_context,
    cartan_split,
    real_pairing,
    real_values,
    solve_real_dual,
)
from core.orbit import (
    Characteristic,
    OrbitLike,
    as_orbit_point,
    from_frame,
    spectral_frame,
    to_frame,
)
from core.weylgrp import ThetaSet
from utils.linalg_utils import comm, dagger, norm, scale_of, to_real_vector

logger = logging.getLogger(__name__)

Variant = Literal["plus", "minus"]


# ============================================================================
# DATA STRUCTURES
# ============================================================================

@dataclass(frozen=True, eq=False)
class CotangentPoint:
    """
    Covector on the flag.

    Attributes:
        base: Flag point Ad(k) H0 (Hermitian)
        W: Momentum matrix in Ad(k) n+
        k: Frame with base = Ad(k) H0
    """
    base: np.ndarray
    W: np.ndarray
    k: np.ndarray

    @property
    def Y(self) -> np.ndarray:
        """Orbit element base + W."""
        return self.base + self.W


@dataclass(frozen=True, eq=False)
class TangentOfCotangent:
    """
    Curve derivative at a covector.

    Attributes:
        dbase: Hermitian tangent of the flag ([A, base] for anti-Hermitian A)
        dW: Derivative of the momentum matrix
    """
    dbase: np.ndarray
    dW: np.ndarray

    def __add__(self, other: "TangentOfCotangent") -> "TangentOfCotangent":
        return TangentOfCotangent(self.dbase + other.dbase, self.dW + other.dW)

    def __sub__(self, other: "TangentOfCotangent") -> "TangentOfCotangent":
        return TangentOfCotangent(self.dbase - other.dbase, self.dW - other.dW)

    def scaled(self, c: float) -> "TangentOfCotangent":
        return TangentOfCotangent(c * self.dbase, c * self.dW)

    def real_vector(self) -> np.ndarray:
        return np.concatenate([to_real_vector(self.dbase), to_real_vector(self.dW)])

    def norm(self) -> float:
        return float(np.linalg.norm(self.real_vector()))


# ============================================================================
# FLAG TANGENTS
# ============================================================================

def nplus_part(ch: Characteristic, k: np.ndarray, Z: np.ndarray) -> np.ndarray:
    """Component of Z in Ad(k) n+."""
    return from_frame(k, to_frame(k, Z) * ch.upper_mask)


def induced_field(ch: Characteristic, Z: np.ndarray, k: np.ndarray) -> np.ndarray:
    """
    Tangent of exp(tZ).x at x = Ad(k) H0, in the Hermitian model.

    Only the Ad(k) n- part of Z moves the flag; it is realized by the
    anti-Hermitian C = N - N* with the same n- part. For Z in su(n) this
    equals [Z, x].
    """
    Zp = to_frame(k, Z) * ch.lower_mask
    C = Zp - dagger(Zp)
    return from_frame(k, C * ch.gaps)


def flag_tangent_residual(ch: Characteristic, k: np.ndarray, v: np.ndarray) -> float:
    """
    Distance of v from the tangent space {[A, x] : A anti-Hermitian} at x = Ad(k) H0.

    The least-squares problem is diagonal in the frame: off-block entries are
    always reachable, Hermitian block-diagonal entries never are.
    """
    vp = to_frame(k, v)
    herm = (vp + dagger(vp)) / 2
    return norm(vp - herm) + norm(herm * ch.zero_mask)


def tangent_to_nminus(ch: Characteristic, k: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Ad(k) n- representative N(v) of a flag tangent v."""
    vp = to_frame(k, v)
    safe = np.where(ch.lower_mask, ch.gaps, 1.0)
    return from_frame(k, np.where(ch.lower_mask, vp / safe, 0.0))


# ============================================================================
# IOTA
# ============================================================================

def iota(ch: Characteristic, Y: OrbitLike) -> CotangentPoint:
    """
    Orbit point -> covector.

    Args:
        ch: Characteristic element
        Y: Orbit point, factorized as Ad(k)(H0 + X)

    Returns:
        CotangentPoint(base=Ad(k) H0, W=Ad(k) X)

    Example:
        >>> ch = Characteristic.from_diagonal([1, -1])
        >>> xi = iota(ch, np.array([[1, 1], [0, -1]]))
        >>> xi.W
        array([[0.+0.j, 1.+0.j],
               [0.+0.j, 0.+0.j]])
    """
    p = as_orbit_point(ch, Y)
    return CotangentPoint(base=from_frame(p.k, ch.H0), W=from_frame(p.k, p.X), k=p.k)


def iota_inverse(xi: CotangentPoint) -> np.ndarray:
    """Covector -> orbit point, Ad(k)(H0 + X) = base + W."""
    return xi.base + xi.W


def zero_covector(ch: Characteristic, k: Optional[np.ndarray] = None) -> CotangentPoint:
    """Zero covector at Ad(k) H0 (the origin when k is omitted)."""
    k = np.eye(ch.n, dtype=complex) if k is None else np.asarray(k, dtype=complex)
    return CotangentPoint(
        base=from_frame(k, ch.H0),
        W=np.zeros((ch.n, ch.n), dtype=complex),
        k=k,
    )


def cotangent_point(ch: Characteristic, base: np.ndarray, W: np.ndarray) -> CotangentPoint:
    """
    Validate raw (base, W) data into a CotangentPoint.

    The frame is recomputed from base and W is checked to lie in Ad(k) n+.
    """
    base = np.asarray(base, dtype=complex)
    W = np.asarray(W, dtype=complex)
    k = spectral_frame(ch, base)
    off = to_frame(k, W) * ~ch.upper_mask
    if norm(off) > 1e-9 * scale_of(W):
        raise NotTangentError(f"W leaves Ad(k) n+ by {norm(off):.2e}")
    return CotangentPoint(base=base, W=W, k=k)


def covector_value(ch: Characteristic, xi: CotangentPoint, v: np.ndarray) -> float:
    """xi(v) = Re B(W, N(v)) for a flag tangent v at xi.base."""
    N = tangent_to_nminus(ch, xi.k, v)
    return float((2 * ch.n * np.trace(xi.W @ N)).real)


def tautological_form(ch: Characteristic, xi: CotangentPoint, V: TangentOfCotangent) -> float:
    """lambda(V) = xi(d pi V), only the horizontal part contributes."""
    return covector_value(ch, xi, V.dbase)


# ============================================================================
# ENERGY AND MOMENT MAP
# ============================================================================

def height(ctx: AlgebraCtx, x: np.ndarray, X: np.ndarray) -> float:
    """Height function f_X(x) = Re B(x, X)."""
    return real_pairing(ctx, x, X)


def energy(ctx: AlgebraCtx, ch: Characteristic, Z: np.ndarray, xi: CotangentPoint) -> float:
    """
    Energy function of Z at xi.

    For Z = A + X (Cartan split): xi(A~(x)) for the compact part, and
    xi(X~(x)) + f_X(x) for the Hermitian part.
    """
    A, X = cartan_split(Z)
    term_A = covector_value(ch, xi, induced_field(ch, A, xi.k))
    term_X = covector_value(ch, xi, induced_field(ch, X, xi.k)) + height(ctx, xi.base, X)
    return term_A + term_X


def mu(ctx: AlgebraCtx, ch: Characteristic, xi: CotangentPoint) -> np.ndarray:
    """
    Moment map: the traceless m with Re B(m, Z) = energy(Z, xi) on a real basis.

    Raises:
        InternalConsistencyError: If the result is off the orbit of H0
    """
    values = np.array([energy(ctx, ch, r, xi) for r in ctx.real_basis])
    m = solve_real_dual(ctx, values)
    if not np.allclose(real_values(ctx, m), values, atol=1e-9 * scale_of(values)):
        raise InternalConsistencyError("Gram solve for the moment map failed")

    spectrum = np.sort(np.linalg.eigvals(m).real)[::-1]
    deviation = np.max(np.abs(spectrum - ch.h))
    if deviation > 100 * SPECTRUM_TOL * scale_of(m):
        raise InternalConsistencyError(f"moment value leaves the orbit by {deviation:.2e}")
    return m


# ============================================================================
# INFINITESIMAL ACTION
# ============================================================================

@lru_cache(maxsize=None)
def _vertical_system(ch: Characteristic) -> Tuple[np.ndarray, np.ndarray, List[Tuple[int, int]]]:
    """
    Frame-independent matrix of the pairing between n+ and the tangent basis.

    Rows: tangent basis [C, H0] with C = E_ij - E_ji, i(E_ij + E_ji) (i<j across blocks).
    Columns: E_ij, i E_ij for the same positions. Entry: Re B(column, N(row)).
    """
    n = ch.n
    positions = [tuple(p) for p in np.argwhere(ch.upper_mask)]
    unknowns, tangents = [], []
    for i, j in positions:
        E_ij = np.zeros((n, n), dtype=complex)
        E_ij[i, j] = 1.0
        E_ji = E_ij.T.copy()
        unknowns.extend([E_ij, 1j * E_ij])
        tangents.extend([E_ij - E_ji, 1j * (E_ij + E_ji)])

    M = np.zeros((len(tangents), len(unknowns)))
    for row, C in enumerate(tangents):
        N = C * ch.lower_mask
        for col, U in enumerate(unknowns):
            M[row, col] = (2 * n * np.trace(U @ N)).real
    return M, np.array(tangents), positions


def vertical_field(ctx: AlgebraCtx, ch: Characteristic, X: np.ndarray, xi: CotangentPoint) -> np.ndarray:
    """
    Vertical field V_X at xi as a dW matrix.

    Solves Re B(dW, N(v)) = -Re B(v, X) over a tangent basis v of the flag,
    with dW in Ad(k) n+; V_X is the fibre-constant covector -(df_X)_x.

    Raises:
        InternalConsistencyError: If the least-squares residual exceeds tolerance
    """
    M, tangents, positions = _vertical_system(ch)
    if not positions:
        return np.zeros((ch.n, ch.n), dtype=complex)

    Xp = to_frame(xi.k, X)
    rhs = np.array([-(2 * ch.n * np.trace((C * ch.gaps) @ Xp)).real for C in tangents])
    coeffs, *_ = scipy.linalg.lstsq(M, rhs)
    residual = np.linalg.norm(M @ coeffs - rhs)
    if residual > LSTSQ_TOL * scale_of(rhs):
        raise InternalConsistencyError(f"vertical field residual {residual:.2e}")

    dWp = np.zeros((ch.n, ch.n), dtype=complex)
    for idx, (i, j) in enumerate(positions):
        dWp[i, j] = coeffs[2 * idx] + 1j * coeffs[2 * idx + 1]
    return from_frame(xi.k, dWp)


def vertical_field_closed_form(ch: Characteristic, X: np.ndarray, xi: CotangentPoint) -> np.ndarray:
    """V_X(x) = [X, x] - X~(x) for Hermitian X."""
    return comm(X, xi.base) - induced_field(ch, X, xi.k)


def lifted_field(ch: Characteristic, Z: np.ndarray, xi: CotangentPoint) -> TangentOfCotangent:
    """Cotangent lift Z# of the induced field: (Z~(x), [Z, W])."""
    return TangentOfCotangent(dbase=induced_field(ch, Z, xi.k), dW=comm(Z, xi.W))


def theta_field(
    ctx: AlgebraCtx,
    ch: Characteristic,
    Z: np.ndarray,
    xi: CotangentPoint,
    variant: Variant = "plus",
) -> TangentOfCotangent:
    """
    Infinitesimal action theta(Z) = Z# +/- V_X with X the Hermitian part of Z.

    Args:
        ctx: Algebra context
        ch: Characteristic element
        Z: Algebra element
        xi: Covector
        variant: "plus" for the action matching the orbit, "minus" for Z# - V_X

    Returns:
        TangentOfCotangent at xi
    """
    _, X = cartan_split(Z)
    lift = lifted_field(ch, Z, xi)
    V = vertical_field(ctx, ch, X, xi)
    sign = 1.0 if variant == "plus" else -1.0
    return TangentOfCotangent(dbase=lift.dbase, dW=lift.dW + sign * V)


def orbit_generator_image(ch: Characteristic, Z: np.ndarray, xi: CotangentPoint) -> TangentOfCotangent:
    """
    d iota of the orbit tangent [Z, Y] at Y = iota^{-1}(xi).

    The base moves by Z~(x) and the momentum absorbs the rest of [Z, Y].
    """
    dbase = induced_field(ch, Z, xi.k)
    return TangentOfCotangent(dbase=dbase, dW=comm(Z, iota_inverse(xi)) - dbase)


# ============================================================================
# GROUP ACTION AND FLOWS
# ============================================================================

def act(ch: Characteristic, g: np.ndarray, xi: CotangentPoint) -> CotangentPoint:
    """Exact action g.xi = iota(Ad(g) iota^{-1}(xi))."""
    g = np.asarray(g, dtype=complex)
    Y = g @ iota_inverse(xi) @ scipy.linalg.inv(g)
    return iota(ch, Y)


def _stage_field(
    ctx: AlgebraCtx,
    ch: Characteristic,
    Z: np.ndarray,
    base: np.ndarray,
    W: np.ndarray,
    variant: Variant,
) -> TangentOfCotangent:
    # spectral projectors are smooth near the flag, so stage points need no projection
    k = spectral_frame(ch, base, tol=STAGE_SPECTRUM_TOL)
    return theta_field(ctx, ch, Z, CotangentPoint(base=base, W=W, k=k), variant)


def _renormalize(ch: Characteristic, base: np.ndarray, W: np.ndarray) -> CotangentPoint:
    k = spectral_frame(ch, base, tol=STAGE_SPECTRUM_TOL)
    snapped = from_frame(k, ch.H0)
    drift = norm(base - snapped)
    if drift > FLOW_DRIFT_TOL * scale_of(base):
        raise IntegrationDivergedError(f"base drift {drift:.2e}")
    return CotangentPoint(base=snapped, W=nplus_part(ch, k, W), k=k)


def flow(
    ctx: AlgebraCtx,
    ch: Characteristic,
    Z: np.ndarray,
    xi: CotangentPoint,
    t: float,
    steps: Optional[int] = None,
    variant: Variant = "plus",
) -> CotangentPoint:
    """
    Integrate theta(Z) from xi for time t with RK4.

    After every step the base is snapped back onto the flag and W is
    re-projected onto Ad(k) n+.

    Args:
        ctx: Algebra context
        ch: Characteristic element
        Z: Algebra element
        xi: Initial covector
        t: Time, any finite real
        steps: Number of steps (default ceil(|t| / FLOW_DT))
        variant: theta variant

    Returns:
        Covector at time t

    Raises:
        IntegrationDivergedError: If a step drifts off the flag
    """
    if not np.isfinite(t):
        raise IntegrationDivergedError(f"non-finite time {t}")
    if t == 0:
        return xi
    if steps is None:
        steps = max(1, int(np.ceil(abs(t) / FLOW_DT)))
    dt = t / steps

    base, W = xi.base, xi.W
    for _ in range(steps):
        k1 = _stage_field(ctx, ch, Z, base, W, variant)
        k2 = _stage_field(ctx, ch, Z, base + 0.5 * dt * k1.dbase, W + 0.5 * dt * k1.dW, variant)
        k3 = _stage_field(ctx, ch, Z, base + 0.5 * dt * k2.dbase, W + 0.5 * dt * k2.dW, variant)
        k4 = _stage_field(ctx, ch, Z, base + dt * k3.dbase, W + dt * k3.dW, variant)
        base = base + dt / 6 * (k1.dbase + 2 * k2.dbase + 2 * k3.dbase + k4.dbase)
        W = W + dt / 6 * (k1.dW + 2 * k2.dW + 2 * k3.dW + k4.dW)
        base = (base + dagger(base)) / 2
        current = _renormalize(ch, base, W)
        base, W = current.base, current.W

    logger.debug(f"Flow integrated: {steps} RK4 steps, t={t}")
    return current


def word_element(word: Sequence[np.ndarray]) -> np.ndarray:
    """g = exp(Z_1) ... exp(Z_m)."""
    if not word:
        raise ValueError("empty word has no size; use the identity directly")
    g = np.eye(word[0].shape[0], dtype=complex)
    for Z in word:
        g = g @ scipy.linalg.expm(Z)
    return g


def cocycle(
    ctx: AlgebraCtx,
    ch: Characteristic,
    word: Sequence[np.ndarray],
    xi: CotangentPoint,
    steps: Optional[int] = None,
) -> np.ndarray:
    """
    c(g) = mu(g.xi) - Ad(g) mu(xi) for g = exp(Z_1) ... exp(Z_m).

    g.xi is obtained by flowing for unit time along each letter, last letter first.
    """
    if not word:
        return np.zeros((ch.n, ch.n), dtype=complex)
    moved = xi
    for Z in reversed(word):
        moved = flow(ctx, ch, Z, moved, 1.0, steps=steps)
    g = word_element(word)
    return mu(ctx, ch, moved) - g @ mu(ctx, ch, xi) @ scipy.linalg.inv(g)


# ============================================================================
# CANONICAL FORM
# ============================================================================

def _theta_matrix(ctx: AlgebraCtx, ch: Characteristic, xi: CotangentPoint) -> np.ndarray:
    return np.column_stack([theta_field(ctx, ch, r, xi).real_vector() for r in ctx.real_basis])


def generator_for(
    ctx: AlgebraCtx,
    ch: Characteristic,
    xi: CotangentPoint,
    V: TangentOfCotangent,
) -> np.ndarray:
    """
    Minimal-norm algebra element Z with theta(Z)(xi) = V.

    Raises:
        NotTangentError: If V is not in the span of the action
    """
    T = _theta_matrix(ctx, ch, xi)
    target = V.real_vector()
    coeffs, *_ = scipy.linalg.lstsq(T, target)
    residual = np.linalg.norm(T @ coeffs - target)
    if residual > 1e-6 * scale_of(target):
        raise NotTangentError(f"action residual {residual:.2e}")
    return np.tensordot(coeffs, np.array(ctx.real_basis), axes=1)


def _raw_two_form(
    ctx: AlgebraCtx,
    ch: Characteristic,
    xi: CotangentPoint,
    Z1: np.ndarray,
    Z2: np.ndarray,
    h: float,
) -> float:
    # chart (s1, s2) -> exp(s1 Z1) exp(s2 Z2) . xi ; coordinate fields are
    # theta(Z1) and theta(Ad(exp(s1 Z1)) Z2)
    def point(s1: float, s2: float) -> CotangentPoint:
        return act(ch, scipy.linalg.expm(s1 * Z1) @ scipy.linalg.expm(s2 * Z2), xi)

    def lam_second(s1: float) -> float:
        p = point(s1, 0.0)
        g = scipy.linalg.expm(s1 * Z1)
        Z2_moved = g @ Z2 @ scipy.linalg.inv(g)
        return tautological_form(ch, p, theta_field(ctx, ch, Z2_moved, p))

    def lam_first(s2: float) -> float:
        p = point(0.0, s2)
        return tautological_form(ch, p, theta_field(ctx, ch, Z1, p))

    d1 = (lam_second(h) - lam_second(-h)) / (2 * h)
    d2 = (lam_first(h) - lam_first(-h)) / (2 * h)
    return -(d1 - d2)


def canonical_two_form(
    ctx: AlgebraCtx,
    ch: Characteristic,
    xi: CotangentPoint,
    V1: TangentOfCotangent,
    V2: TangentOfCotangent,
    h: float = FD_STEP,
) -> float:
    """
    Canonical symplectic form Omega = -d lambda by central differences.

    The tangents are written as theta(Z1), theta(Z2) and d lambda is taken in
    the chart exp(s1 Z1) exp(s2 Z2) . xi. The value is antisymmetrized, so
    Omega(V, V) = 0 exactly.
    """
    Z1 = generator_for(ctx, ch, xi, V1)
    Z2 = generator_for(ctx, ch, xi, V2)
    forward = _raw_two_form(ctx, ch, xi, Z1, Z2, h)
    backward = _raw_two_form(ctx, ch, xi, Z2, Z1, h)
    return 0.5 * (forward - backward)


def hamiltonian_defect(
    ctx: AlgebraCtx,
    ch: Characteristic,
    Z: np.ndarray,
    Zv: np.ndarray,
    xi: CotangentPoint,
    h: float = FD_STEP,
) -> float:
    """
    |Omega(theta(Z), V) - d energy_Z (V)| for V = theta(Zv)(xi).

    The derivative of the energy is taken along exp(s Zv) . xi.
    """
    V = theta_field(ctx, ch, Zv, xi)
    lhs = canonical_two_form(ctx, ch, xi, theta_field(ctx, ch, Z, xi), V, h)
    plus = energy(ctx, ch, Z, act(ch, scipy.linalg.expm(h * Zv), xi))
    minus = energy(ctx, ch, Z, act(ch, scipy.linalg.expm(-h * Zv), xi))
    return abs(lhs - (plus - minus) / (2 * h))


# ============================================================================
# FIELD BRACKETS
# ============================================================================

def ambient_field(ctx: AlgebraCtx, ch: Characteristic, kind: str, Z: np.ndarray):
    """
    Vector field on (base, W) pairs near T*F, for bracket computations.

    kind: "theta" (theta(Z)), "lift" (Z#) or "vertical" (V_Z, Z Hermitian).
    """
    def field(base: np.ndarray, W: np.ndarray) -> TangentOfCotangent:
        k = spectral_frame(ch, base, tol=STAGE_SPECTRUM_TOL)
        xi = CotangentPoint(base=base, W=W, k=k)
        if kind == "theta":
            return theta_field(ctx, ch, Z, xi)
        if kind == "lift":
            return lifted_field(ch, Z, xi)
        if kind == "vertical":
            return TangentOfCotangent(np.zeros_like(base), vertical_field(ctx, ch, Z, xi))
        raise ValueError(f"unknown field kind {kind!r}")
    return field


def field_bracket(U, V, xi: CotangentPoint, h: float) -> TangentOfCotangent:
    """
    Right-invariant bracket [U, V] = DU.V - DV.U at xi, central differences.

    With this sign theta is a Lie-algebra homomorphism.
    """
    u, v = U(xi.base, xi.W), V(xi.base, xi.W)

    def directional(F, d: TangentOfCotangent) -> TangentOfCotangent:
        fwd = F(xi.base + h * d.dbase, xi.W + h * d.dW)
        bwd = F(xi.base - h * d.dbase, xi.W - h * d.dW)
        return (fwd - bwd).scaled(1.0 / (2 * h))

    return directional(U, v) - directional(V, u)


# ============================================================================
# CALIBRATION
# ============================================================================

@lru_cache(maxsize=None)
def calibrate_kks_sign() -> int:
    """
    Sign s with Omega(theta(Z1), theta(Z2)) = s Re B(Y, [Z1, Z2]).

    Fixed once on sl(2) at Y = H0 = diag(1, -1) with Z1 = E21, Z2 = E12.
    """
    ctx = build_context(2)
    ch = Characteristic.from_theta(2, ThetaSet())
    xi = zero_covector(ch)
    Z1 = np.array([[0, 0], [1, 0]], dtype=complex)
    Z2 = np.array([[0, 1], [0, 0]], dtype=complex)
    omega = canonical_two_form(ctx, ch, xi, theta_field(ctx, ch, Z1, xi), theta_field(ctx, ch, Z2, xi))
    raw = real_pairing(ctx, ch.H0, comm(Z1, Z2))
    sign = 1 if omega * raw > 0 else -1
    logger.info(f"🔍 KKS sign calibrated: s={sign:+d} (Omega={omega:.6f}, raw={raw:.1f})")
    return sign


@lru_cache(maxsize=None)
def calibrated_context(n: int) -> AlgebraCtx:
    """AlgebraCtx for sl(n, C) carrying the calibrated KKS sign."""
    return build_context(n, kks_sign=calibrate_kks_sign())
