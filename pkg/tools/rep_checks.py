"""
Representation Model Checks

Exterior powers as representations, weight vectors, the representation
moment map and its orbit, Phi, the Iwasawa route to T*F, and Pluecker
consistency with the flag product.
"""

import logging

import numpy as np
import scipy.linalg

from core.cotangent import iota, iota_inverse
from core.flagprod import embed, transversal
from core.lagrangian import graph_rep_membership
from core.liealg import killing
from core.repmodel import (
    RepElement,
    act_element,
    base_element,
    dual_action,
    flag_covector,
    height_rep,
    highest_weight_vector,
    is_hermitian_moment,
    isotropy_defect,
    lowered_base_element,
    lowest_weight_covector,
    moment_rep,
    phi,
    phi_inv,
    plucker_vector,
    rep_algebra,
    rep_group,
    rep_to_cotangent,
)
from services.sampling_service import SamplingService
from tools.check_base import CheckEnv, structured_check
from utils.linalg_utils import comm, norm, same_line, scale_of

logger = logging.getLogger(__name__)


def _orbit_element(env: CheckEnv, rng: np.random.Generator) -> tuple:
    g = SamplingService.sample_group_element(env.cfg.n, rng)
    return g, act_element(env.rep, g, base_element(env.rep))


@structured_check("rep.homomorphism")
def check_homomorphism(env: CheckEnv) -> float:
    """rho([X, Y]) = [rho(X), rho(Y)] and the compound matrix of exp(X) is exp(rho(X))."""
    rep = env.rep

    def residual(rng: np.random.Generator) -> float:
        X = SamplingService.sample_algebra(env.ctx, rng)
        Y = SamplingService.sample_algebra(env.ctx, rng)
        rX, rY = rep_algebra(rep, X), rep_algebra(rep, Y)
        bracket = norm(rep_algebra(rep, comm(X, Y)) - comm(rX, rY)) / scale_of(rX @ rY)
        Z = SamplingService.sample_traceless(rep.n, rng, 1.0)
        group = rep_group(rep, scipy.linalg.expm(Z))
        exponential = norm(group - scipy.linalg.expm(rep_algebra(rep, Z))) / scale_of(group)
        return max(bracket, exponential)
    return env.max_over_samples(residual, cap=30)


@structured_check("rep.weight_vectors")
def check_weight_vectors(env: CheckEnv) -> float:
    """v0 is killed by positive root vectors, eps0 by negative ones; Cartan acts by +/- mu."""
    rep = env.rep
    v0, eps0 = highest_weight_vector(rep), lowest_weight_covector(rep)
    worst = 0.0
    for i, j in env.ctx.roots:
        E = np.zeros((rep.n, rep.n), dtype=complex)
        E[i, j] = 1.0
        if i < j:
            worst = max(worst, norm(rep_algebra(rep, E) @ v0))
        else:
            worst = max(worst, norm(dual_action(rep, E) @ eps0))
    for H in env.ctx.cartan_basis:
        weight = float(np.sum(np.diag(H)[: rep.k].real))
        worst = max(
            worst,
            norm(rep_algebra(rep, H) @ v0 - weight * v0),
            norm(dual_action(rep, H) @ eps0 + weight * eps0),
        )
    return worst


@structured_check("rep.moment_base")
def check_moment_base(env: CheckEnv) -> float:
    M = moment_rep(env.ctx, env.rep, base_element(env.rep))
    return norm(M - env.ctx.fundamental_H[env.cfg.k - 1])


@structured_check("rep.moment_equivariance")
def check_moment_equivariance(env: CheckEnv) -> float:
    rep = env.rep

    def residual(rng: np.random.Generator) -> float:
        _, el = _orbit_element(env, rng)
        g = SamplingService.sample_group_element(rep.n, rng, radius=1.0)
        lhs = moment_rep(env.ctx, rep, act_element(rep, g, el))
        rhs = g @ moment_rep(env.ctx, rep, el) @ scipy.linalg.inv(g)
        return norm(lhs - rhs) / scale_of(rhs)
    return env.max_over_samples(residual, cap=30)


@structured_check("rep.moment_orbit")
def check_moment_orbit(env: CheckEnv) -> float:
    """Spectrum of M(g.(v0 (x) eps0)) equals the spectrum of H_mu."""
    rep = env.rep
    target = np.sort(env.ch_mu.h)

    def residual(rng: np.random.Generator) -> float:
        _, el = _orbit_element(env, rng)
        M = moment_rep(env.ctx, rep, el)
        spectrum = np.sort(np.linalg.eigvals(M).real)
        imaginary = np.max(np.abs(np.linalg.eigvals(M).imag))
        return max(np.max(np.abs(spectrum - target)), imaginary) / scale_of(M)
    return env.max_over_samples(residual, cap=50)


@structured_check("rep.height_formula")
def check_height_formula(env: CheckEnv) -> float:
    """eps(rho(H) v) equals B(M(el), H), and mu(H) on the base element."""
    rep = env.rep

    def residual(rng: np.random.Generator) -> float:
        _, el = _orbit_element(env, rng)
        H = SamplingService.sample_algebra(env.ctx, rng)
        value = height_rep(rep, el, H)
        expected = killing(env.ctx, moment_rep(env.ctx, rep, el), H)
        return abs(value - expected) / max(1.0, abs(value))

    D = np.diag(np.linspace(1.0, -1.0, rep.n)).astype(complex)
    base = abs(height_rep(rep, base_element(rep), D) - np.sum(np.diag(D)[: rep.k]))
    return max(base, env.max_over_samples(residual, cap=30))


@structured_check("rep.phi_round_trip")
def check_phi_round_trip(env: CheckEnv) -> float:
    rep = env.rep

    def residual(rng: np.random.Generator) -> float:
        _, el = _orbit_element(env, rng)
        rebuilt = phi_inv(phi(el), normalization=el.pairing())
        round_trip = norm(rebuilt.as_matrix() - el.as_matrix()) / scale_of(el.as_matrix())
        v, eps = phi(el)
        rescaled_v, rescaled_eps = phi(RepElement(v=2.0 * el.v, eps=el.eps / 2.0))
        invariance = same_line(v, rescaled_v) + same_line(eps, rescaled_eps)
        return max(round_trip, invariance)
    return env.max_over_samples(residual, cap=30)


@structured_check("rep.cotangent_realization")
def check_cotangent_realization(env: CheckEnv) -> float:
    """rep_to_cotangent(g) = iota(Ad(g) H_mu), and M(g.(v0 (x) eps0)) = Ad(g) H_mu."""
    ch = env.ch_mu

    def residual(rng: np.random.Generator) -> float:
        g, el = _orbit_element(env, rng)
        Y = g @ ch.H0 @ scipy.linalg.inv(g)
        xi = rep_to_cotangent(env.ctx, ch, g)
        expected = iota(ch, Y)
        return max(
            norm(iota_inverse(xi) - Y) / scale_of(Y),
            norm(xi.base - expected.base) / scale_of(Y),
            norm(moment_rep(env.ctx, env.rep, el) - Y) / scale_of(Y),
        )
    return env.max_over_samples(residual, cap=50)


@structured_check("rep.isotropy")
def check_isotropy(env: CheckEnv) -> float:
    return isotropy_defect(env.rep, env.ctx, env.ch_mu)


@structured_check("rep.plucker")
def check_plucker(env: CheckEnv) -> float:
    """
    [v] is the Pluecker point of the first flag of embed(g), eps is the covector of
    the second flag, and eps(v) vanishes once the flags stop being transversal.
    """
    rep = env.rep
    ch = env.ch_mu

    def residual(rng: np.random.Generator) -> float:
        g, el = _orbit_element(env, rng)
        pair = embed(ch, g)
        V, W = pair.first.subspaces[0], pair.second.subspaces[0]
        lines = same_line(el.v, plucker_vector(rep, V)) + same_line(el.eps, flag_covector(rep, W))

        v_plucker = plucker_vector(rep, V)
        transversal_value = abs(flag_covector(rep, W) @ v_plucker)
        mismatch = float(transversal(pair) != (transversal_value > 1e-8))

        # tilt W until it meets V
        W_meet = W.copy()
        W_meet[:, 0] = V[:, 0]
        degenerate = abs(flag_covector(rep, W_meet) @ v_plucker)
        return lines + mismatch + degenerate
    return env.max_over_samples(residual, cap=30)


@structured_check("rep.graph_membership")
def check_graph_membership(env: CheckEnv) -> float:
    """
    Disagreements between the ker eps = v-perp test and K-orbit membership.

    Even samples use unitary g (always in the K-orbit); odd samples use general g,
    decided independently by the Hermitian moment value.
    """
    rep = env.rep
    disagreements = 0.0
    for index in range(env.count(50)):
        rng = env.rng(index)
        if index % 2 == 0:
            g = SamplingService.sample_unitary(rep.n, rng)
            in_orbit = True
        else:
            g = SamplingService.sample_group_element(rep.n, rng)
            in_orbit = None
        el = act_element(rep, g, base_element(rep))
        if in_orbit is None:
            in_orbit = is_hermitian_moment(moment_rep(env.ctx, rep, el))
        disagreements += float(graph_rep_membership(rep, el) != in_orbit)

    disagreements += float(graph_rep_membership(rep, lowered_base_element(rep)))
    return disagreements


REP_SUITE = [
    check_homomorphism,
    check_weight_vectors,
    check_moment_base,
    check_moment_equivariance,
    check_moment_orbit,
    check_height_formula,
    check_phi_round_trip,
    check_cotangent_realization,
    check_isotropy,
    check_plucker,
    check_graph_membership,
]
