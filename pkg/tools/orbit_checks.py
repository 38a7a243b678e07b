"""
Adjoint Orbit Checks

Factorization Y = k (H0 + X) k*, equivariance of the fibration onto the
flag, the parabolic splitting, affinity of the fibres, and invariance and
nondegeneracy of the KKS form.
"""

import logging
from typing import List

import numpy as np
import scipy.linalg

from core.orbit import Characteristic, kks_form, parabolic_split, project_pi, recompose
from services.sampling_service import SamplingService
from tools.check_base import CheckEnv, structured_check
from utils.linalg_utils import comm, dagger, norm, numerical_rank, scale_of

logger = logging.getLogger(__name__)


@structured_check("orbit.factorization")
def check_factorization(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        p = SamplingService.sample_orbit_point(ch, rng)
        return max(
            norm(recompose(ch, p) - p.Y) / scale_of(p.Y),
            norm(dagger(p.k) @ p.k - np.eye(ch.n)),
            abs(np.linalg.det(p.k) - 1.0),
            norm(p.X * ~ch.upper_mask),
        )
    return env.max_over_samples(residual, cap=100)


@structured_check("orbit.projection_equivariance")
def check_projection_equivariance(env: CheckEnv) -> float:
    """pi(Ad(u) Y) = Ad(u) pi(Y) for u in SU(n)."""
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        p = SamplingService.sample_orbit_point(ch, rng)
        u = SamplingService.sample_unitary(ch.n, rng)
        lhs = project_pi(ch, u @ p.Y @ dagger(u))
        rhs = u @ project_pi(ch, p) @ dagger(u)
        return norm(lhs - rhs) / scale_of(rhs)
    return env.max_over_samples(residual, cap=30)


@structured_check("orbit.parabolic_split")
def check_parabolic_split(env: CheckEnv) -> float:
    """Components add up to Z and sit in the negative / zero / positive eigenspaces of ad(H0)."""
    ch = env.ch
    eigen = ch.h[:, None] - ch.h[None, :]
    wrong_sign = int(np.sum(eigen[ch.upper_mask] <= 0) + np.sum(eigen[ch.lower_mask] >= 0))

    def residual(rng: np.random.Generator) -> float:
        Z = SamplingService.sample_algebra(env.ctx, rng)
        minus, zero, plus = parabolic_split(ch, Z)
        return (
            norm(minus + zero + plus - Z)
            + norm(comm(ch.H0, zero))
            + norm(comm(ch.H0, plus) - eigen * plus)
            + norm(comm(ch.H0, minus) - eigen * minus)
        )
    return env.max_over_samples(residual, cap=30) + wrong_sign


@structured_check("orbit.kks_invariance")
def check_kks_invariance(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        p = SamplingService.sample_orbit_point(ch, rng)
        Z1 = SamplingService.sample_algebra(env.ctx, rng)
        Z2 = SamplingService.sample_algebra(env.ctx, rng)
        g = SamplingService.sample_group_element(ch.n, rng)
        g_inv = np.linalg.inv(g)
        moved = kks_form(env.ctx, ch, g @ p.Y @ g_inv, g @ Z1 @ g_inv, g @ Z2 @ g_inv)
        here = kks_form(env.ctx, ch, p, Z1, Z2)
        return abs(moved - here) / max(1.0, abs(here))
    return env.max_over_samples(residual, cap=30)


@structured_check("orbit.fibre_affinity")
def check_fibre_affinity(env: CheckEnv) -> float:
    """Ad(exp N) H0 - H0 stays in n+ for N in n+."""
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        N = SamplingService.sample_algebra(env.ctx, rng) * ch.upper_mask
        g = scipy.linalg.expm(N)
        shifted = g @ ch.H0 @ scipy.linalg.inv(g) - ch.H0
        return norm(shifted * ~ch.upper_mask) / scale_of(shifted)
    return env.max_over_samples(residual, cap=50)


def _tangent_basis_at_base(ch: Characteristic) -> List[np.ndarray]:
    """E_ij and i E_ij over the root spaces of n- and n+; their brackets with H0 span the tangent space."""
    basis = []
    mask = ch.upper_mask | ch.lower_mask
    for i, j in zip(*np.nonzero(mask)):
        E = np.zeros((ch.n, ch.n), dtype=complex)
        E[i, j] = 1.0
        basis.extend([E, 1j * E])
    return basis


@structured_check("orbit.kks_nondegenerate")
def check_kks_nondegenerate(env: CheckEnv) -> float:
    """The Gram matrix of the KKS form at H0 has full real rank 4 dim n+."""
    ch = env.ch
    basis = _tangent_basis_at_base(ch)
    gram = np.array([[kks_form(env.ctx, ch, ch.H0, Za, Zb) for Zb in basis] for Za in basis])
    rank = numerical_rank(gram)
    logger.debug(f"KKS Gram at H0: rank {rank} of {len(basis)}")
    return float(rank != 4 * ch.dim_nplus)


ORBIT_SUITE = [
    check_factorization,
    check_projection_equivariance,
    check_parabolic_split,
    check_kks_invariance,
    check_fibre_affinity,
    check_kks_nondegenerate,
]
