"""
Lie Algebra Checks

Checks for the concrete realization of sl(n, C): Killing form and root-space
orthogonality, Gram solves, fundamental weights, Iwasawa and Cartan
decompositions.
"""

import logging

import numpy as np

from core.liealg import (
    cartan_split,
    coroot_duality_matrix,
    iwasawa,
    killing,
    killing_via_ad,
    real_pairing,
    real_values,
    solve_real_dual,
)
from services.sampling_service import SamplingService
from tools.check_base import CheckEnv, structured_check
from utils.linalg_utils import dagger, norm, scale_of

logger = logging.getLogger(__name__)


@structured_check("liealg.killing_oracle")
def check_killing_oracle(env: CheckEnv) -> float:
    """Relative gap between 2n tr(XY) and tr(ad X ad Y) on random pairs."""
    def residual(rng: np.random.Generator) -> float:
        X = SamplingService.sample_algebra(env.ctx, rng)
        Y = SamplingService.sample_algebra(env.ctx, rng)
        value = killing(env.ctx, X, Y)
        return abs(value - killing_via_ad(env.ctx, X, Y)) / max(1.0, abs(value))
    return env.max_over_samples(residual, cap=50)


@structured_check("liealg.gram_duality")
def check_gram_duality(env: CheckEnv) -> float:
    def residual(rng: np.random.Generator) -> float:
        Z = SamplingService.sample_algebra(env.ctx, rng)
        recovered = solve_real_dual(env.ctx, real_values(env.ctx, Z))
        return norm(recovered - Z) / scale_of(Z)
    return env.max_over_samples(residual, cap=50)


@structured_check("liealg.fundamental_duals")
def check_fundamental_duals(env: CheckEnv) -> float:
    """Re B(H_mu_k, H_i) must be the Kronecker delta on the simple coroots."""
    worst = 0.0
    for k, H_mu in enumerate(env.ctx.fundamental_H, start=1):
        for i, H in enumerate(env.ctx.cartan_basis, start=1):
            expected = 1.0 if i == k else 0.0
            worst = max(worst, abs(real_pairing(env.ctx, H_mu, H) - expected))
    return worst


@structured_check("liealg.coroot_duality")
def check_coroot_duality(env: CheckEnv) -> float:
    D = coroot_duality_matrix(env.ctx)
    return norm(D - np.eye(env.cfg.n - 1))


@structured_check("liealg.iwasawa")
def check_iwasawa(env: CheckEnv) -> float:
    n = env.cfg.n

    def residual(rng: np.random.Generator) -> float:
        g = SamplingService.sample_group_element(n, rng)
        f = iwasawa(g)
        a_diag = np.diag(f.a)
        return max(
            norm(f.product() - g) / scale_of(g),
            norm(dagger(f.k) @ f.k - np.eye(n)),
            abs(np.linalg.det(f.k) - 1.0),
            norm(np.tril(f.n_part, -1)) + norm(np.diag(f.n_part) - 1.0),
            norm(a_diag.imag) + float(np.sum(a_diag.real <= 0)),
        )
    return env.max_over_samples(residual, cap=50)


@structured_check("liealg.cartan_split")
def check_cartan_split(env: CheckEnv) -> float:
    def residual(rng: np.random.Generator) -> float:
        Z = SamplingService.sample_algebra(env.ctx, rng)
        A, X = cartan_split(Z)
        return norm(A + X - Z) + norm(A + dagger(A)) + norm(X - dagger(X))
    return env.max_over_samples(residual, cap=50)


@structured_check("liealg.root_orthogonality")
def check_root_orthogonality(env: CheckEnv) -> float:
    """Exhaustive over pairs of root vectors; B(E_ij, E_ji) must be 2n."""
    n = env.cfg.n
    units = {}
    for i, j in env.ctx.roots:
        E = np.zeros((n, n), dtype=complex)
        E[i, j] = 1.0
        units[(i, j)] = E
    worst = 0.0
    for (i, j), E in units.items():
        for (k, l), F in units.items():
            value = killing(env.ctx, E, F)
            expected = 2.0 * n if (k, l) == (j, i) else 0.0
            worst = max(worst, abs(value.real - expected), abs(value.imag))
    return worst / (2.0 * n)


LIEALG_SUITE = [
    check_killing_oracle,
    check_gram_duality,
    check_fundamental_duals,
    check_coroot_duality,
    check_iwasawa,
    check_cartan_split,
    check_root_orthogonality,
]
