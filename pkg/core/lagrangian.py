"""
Borel metric, complex structure and Lagrangean graphs.

Flag points are Hermitian matrices x = Ad(k) H0; tangents are Hermitian
matrices [A, x] with A anti-Hermitian. All rules are stated in the frame
of x, where a tangent is determined by its n+ entries v'_ij.

    metric(v, w)  = sum over n+ of Re(v'_ij conj(w'_ij)) / (h_i - h_j)
    J v           : n+ entries times i, n- entries times -i
    Omega(v, w)   = metric(v, J w)

R_{w0}: F_{H0} -> F_{H0*} is x -> -x, where F_{H0*} = Ad(K)(-H0) carries
the characteristic ch.dual().
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
import scipy.linalg

from config.settings import TANGENT_TOL
from core.cotangent import induced_field
from core.errors import (
    ContractViolation,
    InternalConsistencyError,
    NotTangentError,
)
from core.liealg import build_context, compact_basis, root_plane_vectors
from core.orbit import Characteristic, factorize, from_frame, spectral_frame, to_frame
from core.repmodel import ExteriorRep, RepElement, hermitian_dual, rep_group
from core.weylgrp import WeylElement, representative
from utils.linalg_utils import (
    dagger,
    haar_unitary,
    independent_subset,
    norm,
    same_line,
    scale_of,
)

logger = logging.getLogger(__name__)

TangentPair = Tuple[np.ndarray, np.ndarray]


# ============================================================================
# DATA STRUCTURES
# ============================================================================

@dataclass(frozen=True, eq=False)
class GraphSpec:
    """
    Map F_{H0} -> F_{H0*} whose graph is tested.

    Attributes:
        k1: Unitary applied after R_{w0}
        k2: Unitary applied before R_{w0}
        m: Torus element; when given the map is m o R_{w0} and k1, k2 are ignored
        involution: Use the identity map instead (self-dual flags only, negative control)
    """
    k1: np.ndarray
    k2: np.ndarray
    m: Optional[np.ndarray] = None
    involution: bool = False

    def __post_init__(self):
        for name in ("k1", "k2", "m"):
            U = getattr(self, name)
            if U is None:
                continue
            U = np.asarray(U, dtype=complex)
            if norm(dagger(U) @ U - np.eye(U.shape[0])) > 1e-12 * U.shape[0]:
                raise ContractViolation(f"{name} is not unitary")
        if self.m is not None:
            m = np.asarray(self.m)
            if norm(m - np.diag(np.diag(m))) > 0:
                raise ContractViolation("m must be diagonal")

    @classmethod
    def plain(cls, n: int) -> "GraphSpec":
        eye = np.eye(n, dtype=complex)
        return cls(k1=eye, k2=eye)

    @classmethod
    def identity_map(cls, n: int) -> "GraphSpec":
        eye = np.eye(n, dtype=complex)
        return cls(k1=eye, k2=eye, involution=True)

    @property
    def effective(self) -> np.ndarray:
        """Unitary u with graph map x -> Ad(u) R_{w0}(x)."""
        if self.m is not None:
            return np.asarray(self.m, dtype=complex)
        return np.asarray(self.k1, dtype=complex) @ np.asarray(self.k2, dtype=complex)


@dataclass(frozen=True, eq=False)
class MetricSample:
    """
    Flag point with a spanning set of tangents.

    Attributes:
        x: Flag point (Hermitian)
        tangent_basis: Independent tangents [A, x], real dimension of the flag
    """
    x: np.ndarray
    tangent_basis: List[np.ndarray] = field(default_factory=list)


# ============================================================================
# METRIC AND COMPLEX STRUCTURE
# ============================================================================

def _frame_tangent(ch: Characteristic, x: np.ndarray, v: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    k = spectral_frame(ch, x)
    vp = to_frame(k, np.asarray(v, dtype=complex))
    herm = (vp + dagger(vp)) / 2
    residual = norm(vp - herm) + norm(herm * ch.zero_mask)
    if residual > TANGENT_TOL * scale_of(v):
        raise NotTangentError(f"residual {residual:.2e}")
    return k, vp


def borel_metric(ch: Characteristic, x: np.ndarray, v: np.ndarray, w: np.ndarray) -> float:
    """
    Borel metric at x.

    Args:
        ch: Characteristic of the flag
        x: Flag point
        v, w: Tangents at x

    Returns:
        Real inner product, alpha(H0) on the unit root planes

    Raises:
        NotTangentError: If v or w is not tangent at x
    """
    k, vp = _frame_tangent(ch, x, v)
    _, wp = _frame_tangent(ch, x, w)
    upper = ch.upper_mask
    weights = (ch.h[:, None] - ch.h[None, :])[upper]
    return float(np.sum((vp[upper] * np.conj(wp[upper])).real / weights))


def complex_structure(ch: Characteristic, x: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Canonical complex structure J at x, with J A~_alpha = Z~_alpha at H0."""
    k, vp = _frame_tangent(ch, x, v)
    Jp = 1j * vp * ch.upper_mask - 1j * vp * ch.lower_mask
    return from_frame(k, Jp)


def kaehler_form(ch: Characteristic, x: np.ndarray, v: np.ndarray, w: np.ndarray) -> float:
    """Omega(v, w) = metric(v, J w)."""
    return borel_metric(ch, x, v, complex_structure(ch, x, w))


def compact_generator(ch: Characteristic, x: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Anti-Hermitian A with [A, x] = v and no block-diagonal part in the frame of x."""
    k, vp = _frame_tangent(ch, x, v)
    safe = np.where(ch.upper_mask, ch.gaps, 1.0)
    U = np.where(ch.upper_mask, vp / safe, 0.0)
    return from_frame(k, U - dagger(U))


def tangent_sample(ch: Characteristic, x: np.ndarray) -> MetricSample:
    """Independent induced tangents A~(x) over the compact basis."""
    ctx = build_context(ch.n)
    k = spectral_frame(ch, x)
    fields = [induced_field(ch, A, k) for A in compact_basis(ctx)]
    keep = independent_subset(fields)
    if len(keep) != 2 * ch.dim_nplus:
        raise InternalConsistencyError(f"tangent rank {len(keep)} != {2 * ch.dim_nplus}")
    return MetricSample(x=x, tangent_basis=[fields[i] for i in keep])


def weyl_point_rule_residual(ch: Characteristic, w: WeylElement) -> float:
    """
    Compare J at x = Ad(w~)H0 with the root-sign rule.

    For a positive root alpha with alpha(x) != 0, J A~_alpha = sign(alpha(x)) Z~_alpha.
    """
    P = representative(w)
    x = P @ ch.H0 @ dagger(P)
    d = np.diag(x).real
    worst = 0.0
    for i in range(ch.n):
        for j in range(i + 1, ch.n):
            value = d[i] - d[j]
            if abs(value) < 1e-12:
                continue
            A, Z = root_plane_vectors(ch.n, (i, j))
            At = A @ x - x @ A
            Zt = Z @ x - x @ Z
            worst = max(worst, norm(complex_structure(ch, x, At) - np.sign(value) * Zt))
    return worst


def closedness_defect(
    ch: Characteristic,
    x: np.ndarray,
    generators: Sequence[np.ndarray],
    h: float = 1e-4,
) -> float:
    """
    d Omega(A1~, A2~, A3~) at x by central differences.

    Uses [A~, B~] = -[A, B]~ for the vector fields of the left action.
    """
    A1, A2, A3 = generators

    def tilde(A: np.ndarray, y: np.ndarray) -> np.ndarray:
        return A @ y - y @ A

    def omega(y: np.ndarray, A: np.ndarray, B: np.ndarray) -> float:
        return kaehler_form(ch, y, tilde(A, y), tilde(B, y))

    def derivative(C: np.ndarray, A: np.ndarray, B: np.ndarray) -> float:
        plus = scipy.linalg.expm(h * C)
        minus = scipy.linalg.expm(-h * C)
        y_plus = plus @ x @ dagger(plus)
        y_minus = minus @ x @ dagger(minus)
        return (omega(y_plus, A, B) - omega(y_minus, A, B)) / (2 * h)

    def bracket(A: np.ndarray, B: np.ndarray) -> np.ndarray:
        return -(A @ B - B @ A)

    value = (
        derivative(A1, A2, A3) - derivative(A2, A1, A3) + derivative(A3, A1, A2)
        - omega(x, bracket(A1, A2), A3)
        + omega(x, bracket(A1, A3), A2)
        - omega(x, bracket(A2, A3), A1)
    )
    return abs(value)


# ============================================================================
# R_{w0}
# ============================================================================

def r_w0_map(ch: Characteristic, x: np.ndarray) -> np.ndarray:
    """
    R_{w0}(Ad(u)H0) = Ad(u)(-H0), a point of F_{H0*}.

    Raises:
        InternalConsistencyError: If the frame-built image differs from -x
    """
    k = spectral_frame(ch, x)
    image = from_frame(k, -ch.H0)
    gap = norm(image + x)
    if gap > 1e-9 * scale_of(x):
        raise InternalConsistencyError(f"R_w0 depends on the frame by {gap:.2e}")
    spectral_frame(ch.dual(), image)
    return image


def pushforward(ch: Characteristic, u: np.ndarray, x: np.ndarray, v: np.ndarray, target: np.ndarray) -> np.ndarray:
    """
    d(x -> Ad(u) R_{w0}(x)) applied to v, via its compact generator.

    A tangent A~(x) is sent to (Ad(u)A)~ at the image point.
    """
    A = compact_generator(ch, x, v)
    B = u @ A @ dagger(u)
    return B @ target - target @ B


def graph_map(ch: Characteristic, spec: GraphSpec, x: np.ndarray) -> np.ndarray:
    """Image of x under the map of spec."""
    if spec.involution:
        if ch.dual() != ch:
            raise ContractViolation("the identity map needs a self-dual flag")
        return np.asarray(x, dtype=complex)
    u = spec.effective
    return u @ r_w0_map(ch, x) @ dagger(u)


def graph_tangent_basis(ch: Characteristic, spec: GraphSpec, x: np.ndarray) -> List[TangentPair]:
    """
    Tangent pairs (A~(x), (Ad(u)A)~(y)) of the graph at (x, y = map(x)).

    Raises:
        InternalConsistencyError: If the pairs do not span dim F
    """
    ctx = build_context(ch.n)
    y = graph_map(ch, spec, x)
    u = np.eye(ch.n, dtype=complex) if spec.involution else spec.effective
    pairs = []
    for A in compact_basis(ctx):
        B = u @ A @ dagger(u)
        pairs.append((A @ x - x @ A, B @ y - y @ B))

    keep = independent_subset([np.concatenate([a.ravel(), b.ravel()]) for a, b in pairs])
    if len(keep) != 2 * ch.dim_nplus:
        raise InternalConsistencyError(f"graph tangent rank {len(keep)} != {2 * ch.dim_nplus}")
    return [pairs[i] for i in keep]


def graph_pushforward_defect(ch: Characteristic, spec: GraphSpec, x: np.ndarray, h: float = 1e-5) -> float:
    """Max gap between the paired tangents and a central difference of the graph map."""
    ctx = build_context(ch.n)
    y = graph_map(ch, spec, x)
    u = np.eye(ch.n, dtype=complex) if spec.involution else spec.effective
    worst = 0.0
    for A in compact_basis(ctx):
        plus = scipy.linalg.expm(h * A)
        minus = scipy.linalg.expm(-h * A)
        fd = (graph_map(ch, spec, plus @ x @ dagger(plus))
              - graph_map(ch, spec, minus @ x @ dagger(minus))) / (2 * h)
        B = u @ A @ dagger(u)
        worst = max(worst, norm(fd - (B @ y - y @ B)))
    return worst


def graph_rank(ch: Characteristic, spec: GraphSpec, x: np.ndarray) -> int:
    """Real dimension of the graph tangent space, from all compact generators."""
    ctx = build_context(ch.n)
    y = graph_map(ch, spec, x)
    u = np.eye(ch.n, dtype=complex) if spec.involution else spec.effective
    columns = []
    for A in compact_basis(ctx):
        B = u @ A @ dagger(u)
        columns.append(np.concatenate([(A @ x - x @ A).ravel(), (B @ y - y @ B).ravel()]))
    return len(independent_subset(columns))


# ============================================================================
# RESIDUALS
# ============================================================================

def _flag_points(ch: Characteristic, samples: int, seed: int) -> List[np.ndarray]:
    rng = np.random.default_rng(seed)
    points = [ch.H0.copy()]
    for _ in range(max(0, samples - 1)):
        u = haar_unitary(rng, ch.n)
        points.append(u @ ch.H0 @ dagger(u))
    return points


def lagrangian_residual_at(ch: Characteristic, spec: GraphSpec, x: np.ndarray) -> float:
    """Max |Omega(v1, v2) + Omega*(w1, w2)| over pairs of graph tangents at x."""
    target_ch = ch if spec.involution else ch.dual()
    y = graph_map(ch, spec, x)
    pairs = graph_tangent_basis(ch, spec, x)
    worst = 0.0
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            v1, w1 = pairs[a]
            v2, w2 = pairs[b]
            value = kaehler_form(ch, x, v1, v2) + kaehler_form(target_ch, y, w1, w2)
            worst = max(worst, abs(value))
    return worst


def lagrangian_residual(ch: Characteristic, spec: GraphSpec, samples: int, seed: int) -> float:
    """
    Product-form value on the graph of spec, maximized over sampled points.

    Theory predicts 0 for every k1 o R_{w0} o k2 and m o R_{w0}.
    """
    return max(lagrangian_residual_at(ch, spec, x) for x in _flag_points(ch, samples, seed))


def antiholomorphy_residual(ch: Characteristic, samples: int, seed: int, flip: bool = False) -> float:
    """
    Max ||dR(J v) + J*(dR v)|| over sampled points and tangent bases.

    flip=True measures holomorphy instead, ||dR(J v) - J*(dR v)||.
    """
    dual = ch.dual()
    eye = np.eye(ch.n, dtype=complex)
    sign = -1.0 if flip else 1.0
    worst = 0.0
    for x in _flag_points(ch, samples, seed):
        y = r_w0_map(ch, x)
        for v in tangent_sample(ch, x).tangent_basis:
            dR_Jv = pushforward(ch, eye, x, complex_structure(ch, x, v), y)
            J_dRv = complex_structure(dual, y, pushforward(ch, eye, x, v, y))
            worst = max(worst, norm(dR_Jv + sign * J_dRv))
    return worst


def isometry_residual(ch: Characteristic, samples: int, seed: int, scale: float = 1.0) -> float:
    """
    Max |(dR v, dR w)* - scale (v, w)| over sampled points.

    scale != 1 is a negative control.
    """
    dual = ch.dual()
    eye = np.eye(ch.n, dtype=complex)
    worst = 0.0
    for x in _flag_points(ch, samples, seed):
        y = r_w0_map(ch, x)
        basis = tangent_sample(ch, x).tangent_basis
        images = [pushforward(ch, eye, x, v, y) for v in basis]
        for a in range(len(basis)):
            for b in range(a, len(basis)):
                here = borel_metric(ch, x, basis[a], basis[b])
                there = borel_metric(dual, y, images[a], images[b])
                worst = max(worst, abs(there - scale * here))
    return worst


def k_orbit_deviation(ch: Characteristic, samples: int, seed: int, radius: float = 2.0) -> float:
    """
    Distance between graph(R_{w0}) and the diagonal K-orbit of (H0, -H0), both directions.

    K-orbit points (Ad(u)H0, Ad(u)(-H0)) must satisfy the graph equation. Graph
    points over projections of Ad(g)H0 must be K-orbit points for the unitary
    factor of the ordered Schur form, a frame built independently of R_{w0}.
    """
    ctx = build_context(ch.n)
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        u = haar_unitary(rng, ch.n)
        x, partner = u @ ch.H0 @ dagger(u), u @ (-ch.H0) @ dagger(u)
        worst = max(worst, norm(r_w0_map(ch, x) - partner))

        coeffs = rng.standard_normal(len(ctx.real_basis))
        Z = np.tensordot(coeffs, np.array(ctx.real_basis), axes=1)
        Z *= radius * rng.uniform() / max(norm(Z), 1e-12)
        g = scipy.linalg.expm(Z)
        k = factorize(ch, g @ ch.H0 @ scipy.linalg.inv(g)).k
        base = from_frame(k, ch.H0)
        worst = max(worst, norm(r_w0_map(ch, base) - from_frame(k, -ch.H0)))
    return worst


# ============================================================================
# REPRESENTATION GRAPH
# ============================================================================

def graph_rep_membership(
    rep: ExteriorRep,
    el: RepElement,
    m: Optional[np.ndarray] = None,
    tol: float = 1e-8,
) -> bool:
    """
    Whether v (x) eps lies over the graph: eps proportional to the Hermitian dual of v.

    With a torus element m, rho*(m)^{-1} eps = rho(m)^T eps is tested instead.
    """
    eps = np.asarray(el.eps, dtype=complex)
    if m is not None:
        eps = rep_group(rep, m).T @ eps
    return same_line(eps, hermitian_dual(el.v)) <= tol

