"""
Cotangent Model Checks

Checks for the identification of the adjoint orbit with T*F:
- iota / mu inversion, energy functions and the infinitesimal action theta
- Flows against the exact action, and vanishing of the cocycle
- Finite-difference checks of the canonical form, the bracket identities
  and the homomorphism property of theta
- Transitivity, isotropy and the calibrated KKS sign
"""

import logging

import numpy as np
import scipy.linalg

from config import FD_BRACKET_STEP, FD_STEP
from core.cotangent import (
    TangentOfCotangent,
    act,
    ambient_field,
    calibrate_kks_sign,
    canonical_two_form,
    cocycle,
    energy,
    field_bracket,
    flow,
    hamiltonian_defect,
    iota,
    iota_inverse,
    mu,
    orbit_generator_image,
    theta_field,
    vertical_field,
    vertical_field_closed_form,
    zero_covector,
)
from core.liealg import real_pairing
from core.orbit import kks_form
from services.sampling_service import SamplingService
from tools.check_base import CheckEnv, structured_check
from utils.linalg_utils import comm, norm, numerical_rank, scale_of, stack_real

logger = logging.getLogger(__name__)

# covectors for derivative-based checks stay close to the zero section
NEAR_RADIUS = 1.0
LETTER_RADIUS = 0.3


def _flow_steps(env: CheckEnv) -> int:
    return max(1, int(np.ceil(1.0 / env.cfg.flow_dt)))


# ============================================================================
# IOTA, MU AND ENERGY
# ============================================================================

@structured_check("cotangent.mu_iota_inverse")
def check_mu_iota_inverse(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        p = SamplingService.sample_orbit_point(ch, rng)
        xi = iota(ch, p)
        return max(
            norm(mu(env.ctx, ch, xi) - p.Y) / scale_of(p.Y),
            norm(iota_inverse(xi) - p.Y) / scale_of(p.Y),
        )
    return env.max_over_samples(residual, cap=100)


@structured_check("cotangent.mu_base_value")
def check_mu_base_value(env: CheckEnv) -> float:
    return norm(mu(env.ctx, env.ch, zero_covector(env.ch)) - env.ch.H0)


@structured_check("cotangent.energy_pairing")
def check_energy_pairing(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        p = SamplingService.sample_orbit_point(ch, rng)
        Z = SamplingService.sample_algebra(env.ctx, rng)
        expected = real_pairing(env.ctx, p.Y, Z)
        return abs(energy(env.ctx, ch, Z, iota(ch, p)) - expected) / max(1.0, abs(expected))
    return env.max_over_samples(residual, cap=50)


# ============================================================================
# INFINITESIMAL ACTION
# ============================================================================

@structured_check("cotangent.vertical_closed_form")
def check_vertical_closed_form(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng)
        X = SamplingService.sample_hermitian(ch.n, rng)
        solved = vertical_field(env.ctx, ch, X, xi)
        return norm(solved - vertical_field_closed_form(ch, X, xi)) / scale_of(solved)
    return env.max_over_samples(residual, cap=50)


@structured_check("cotangent.theta_orbit_generator")
def check_theta_orbit_generator(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng)
        Z = SamplingService.sample_algebra(env.ctx, rng)
        gap = theta_field(env.ctx, ch, Z, xi) - orbit_generator_image(ch, Z, xi)
        return gap.norm() / scale_of(xi.Y, Z)
    return env.max_over_samples(residual, cap=50)


@structured_check("cotangent.theta_minus_compact")
def check_theta_minus_compact(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng)
        A = SamplingService.sample_anti_hermitian(ch.n, rng)
        plus = theta_field(env.ctx, ch, A, xi, "plus")
        minus = theta_field(env.ctx, ch, A, xi, "minus")
        return (plus - minus).norm()
    return env.max_over_samples(residual, cap=30)


@structured_check("cotangent.theta_minus_control")
def check_theta_minus_control(env: CheckEnv) -> float:
    """Smallest, over samples, of the largest gap between the variants on a Hermitian basis."""
    ch = env.ch
    hermitian = [(b + b.conj().T) / 2 for b in env.ctx.basis]

    def observed(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng)
        gaps = [
            (theta_field(env.ctx, ch, X, xi, "plus") - theta_field(env.ctx, ch, X, xi, "minus")).norm()
            for X in hermitian
        ]
        return max(gaps)
    return env.min_over_samples(observed, cap=30)


@structured_check("cotangent.mu_equivariance")
def check_mu_equivariance(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng)
        g = SamplingService.sample_group_element(ch.n, rng, radius=1.0)
        lhs = mu(env.ctx, ch, act(ch, g, xi))
        rhs = g @ mu(env.ctx, ch, xi) @ scipy.linalg.inv(g)
        return norm(lhs - rhs) / scale_of(rhs)
    return env.max_over_samples(residual, cap=30)


# ============================================================================
# FLOWS AND COCYCLE
# ============================================================================

@structured_check("cotangent.flow_matches_action")
def check_flow_matches_action(env: CheckEnv) -> float:
    """Unit-time flow of theta(Z) reaches exp(Z).xi."""
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng, radius=NEAR_RADIUS)
        Z = SamplingService.sample_traceless(ch.n, rng, LETTER_RADIUS)
        flowed = flow(env.ctx, ch, Z, xi, 1.0, steps=_flow_steps(env))
        exact = act(ch, scipy.linalg.expm(Z), xi)
        return norm(iota_inverse(flowed) - iota_inverse(exact)) / scale_of(exact.Y)
    return env.max_over_samples(residual, cap=30)


@structured_check("cotangent.cocycle_vanishing")
def check_cocycle_vanishing(env: CheckEnv) -> float:
    """Words have one or two letters."""
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng, radius=NEAR_RADIUS)
        letters = 1 + int(rng.integers(0, 2))
        word = SamplingService.sample_word(ch.n, rng, letters, LETTER_RADIUS)
        c = cocycle(env.ctx, ch, word, xi, steps=_flow_steps(env))
        return norm(c) / scale_of(xi.Y)
    return env.max_over_samples(residual, cap=30)


# ============================================================================
# CANONICAL FORM
# ============================================================================

@structured_check("cotangent.symplectic_pullback")
def check_symplectic_pullback(env: CheckEnv) -> float:
    """Omega(theta(Z1), theta(Z2)) against s Re B(Y, [Z1, Z2])."""
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng, radius=NEAR_RADIUS)
        Z1 = SamplingService.sample_traceless(ch.n, rng, 1.0)
        Z2 = SamplingService.sample_traceless(ch.n, rng, 1.0)
        omega = canonical_two_form(
            env.ctx, ch, xi,
            theta_field(env.ctx, ch, Z1, xi),
            theta_field(env.ctx, ch, Z2, xi),
            h=FD_STEP,
        )
        expected = kks_form(env.ctx, ch, iota_inverse(xi), Z1, Z2)
        return abs(omega - expected) / max(1.0, abs(expected))
    return env.max_over_samples(residual, cap=30)


@structured_check("cotangent.hamiltonian_energy")
def check_hamiltonian_energy(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng, radius=NEAR_RADIUS)
        Z = SamplingService.sample_traceless(ch.n, rng, 1.0)
        Zv = SamplingService.sample_traceless(ch.n, rng, 1.0)
        return hamiltonian_defect(env.ctx, ch, Z, Zv, xi, h=FD_STEP)
    return env.max_over_samples(residual, cap=30)


# ============================================================================
# BRACKET IDENTITIES
# ============================================================================

def _vertical_tangent(env: CheckEnv, X: np.ndarray, xi) -> TangentOfCotangent:
    return TangentOfCotangent(np.zeros_like(xi.base), vertical_field(env.ctx, env.ch, X, xi))


@structured_check("cotangent.bracket_lift")
def check_bracket_lift(env: CheckEnv) -> float:
    """[A#, V_X] = V_[A, X] for A in u and X in s."""
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng, radius=NEAR_RADIUS)
        A = SamplingService.sample_anti_hermitian(ch.n, rng)
        X = SamplingService.sample_hermitian(ch.n, rng)
        bracket = field_bracket(
            ambient_field(env.ctx, ch, "lift", A),
            ambient_field(env.ctx, ch, "vertical", X),
            xi,
            FD_BRACKET_STEP,
        )
        return (bracket - _vertical_tangent(env, comm(A, X), xi)).norm()
    return env.max_over_samples(residual, cap=10)


@structured_check("cotangent.bracket_mixed")
def check_bracket_mixed(env: CheckEnv) -> float:
    """[X#, V_Y] = [Y#, V_X] for X, Y in s."""
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng, radius=NEAR_RADIUS)
        X = SamplingService.sample_hermitian(ch.n, rng)
        Y = SamplingService.sample_hermitian(ch.n, rng)
        left = field_bracket(
            ambient_field(env.ctx, ch, "lift", X),
            ambient_field(env.ctx, ch, "vertical", Y),
            xi,
            FD_BRACKET_STEP,
        )
        right = field_bracket(
            ambient_field(env.ctx, ch, "lift", Y),
            ambient_field(env.ctx, ch, "vertical", X),
            xi,
            FD_BRACKET_STEP,
        )
        return (left - right).norm()
    return env.max_over_samples(residual, cap=10)


@structured_check("cotangent.bracket_vertical")
def check_bracket_vertical(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng, radius=NEAR_RADIUS)
        X = SamplingService.sample_hermitian(ch.n, rng)
        Y = SamplingService.sample_hermitian(ch.n, rng)
        bracket = field_bracket(
            ambient_field(env.ctx, ch, "vertical", X),
            ambient_field(env.ctx, ch, "vertical", Y),
            xi,
            FD_BRACKET_STEP,
        )
        return bracket.norm()
    return env.max_over_samples(residual, cap=10)


@structured_check("cotangent.theta_homomorphism")
def check_theta_homomorphism(env: CheckEnv) -> float:
    """[theta(Z1), theta(Z2)] = theta([Z1, Z2]) for general Z1, Z2."""
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng, radius=NEAR_RADIUS)
        Z1 = SamplingService.sample_traceless(ch.n, rng, 1.0)
        Z2 = SamplingService.sample_traceless(ch.n, rng, 1.0)
        bracket = field_bracket(
            ambient_field(env.ctx, ch, "theta", Z1),
            ambient_field(env.ctx, ch, "theta", Z2),
            xi,
            FD_BRACKET_STEP,
        )
        expected = theta_field(env.ctx, ch, comm(Z1, Z2), xi)
        return (bracket - expected).norm() / max(1.0, expected.norm())
    return env.max_over_samples(residual, cap=10)


# ============================================================================
# ORBIT STRUCTURE
# ============================================================================

@structured_check("cotangent.transitivity")
def check_transitivity(env: CheckEnv) -> float:
    """Number of sampled covectors where theta(g) does not span the full tangent space."""
    ch = env.ch
    full = 4 * ch.dim_nplus

    def misses(rng: np.random.Generator) -> float:
        xi = SamplingService.sample_covector(ch, rng)
        columns = stack_real(
            np.concatenate([t.dbase.ravel(), t.dW.ravel()])
            for t in (theta_field(env.ctx, ch, r, xi) for r in env.ctx.real_basis)
        )
        return float(numerical_rank(columns) != full)
    return env.sum_over_samples(misses, cap=10)


@structured_check("cotangent.isotropy")
def check_isotropy(env: CheckEnv) -> float:
    """theta(Z) vanishes at the zero covector of the origin for Z in z_Theta."""
    ch = env.ch
    xi = zero_covector(ch)
    worst = 0.0
    for Z in env.ctx.real_basis:
        if norm(Z * ~ch.zero_mask) > 0:
            continue
        worst = max(worst, theta_field(env.ctx, ch, Z, xi).norm())
    return worst


@structured_check("cotangent.calibrated_sign")
def check_calibrated_sign(env: CheckEnv) -> float:
    """Sign of Omega / KKS at the origin of this flag against the sl(2) calibration."""
    ch = env.ch
    i, j = (int(a) for a in np.argwhere(ch.upper_mask)[0])
    Z1 = np.zeros((ch.n, ch.n), dtype=complex)
    Z1[j, i] = 1.0
    Z2 = Z1.T.copy()
    xi = zero_covector(ch)
    omega = canonical_two_form(
        env.ctx, ch, xi,
        theta_field(env.ctx, ch, Z1, xi),
        theta_field(env.ctx, ch, Z2, xi),
        h=FD_STEP,
    )
    raw = real_pairing(env.ctx, ch.H0, comm(Z1, Z2))
    sign = 1 if omega * raw > 0 else -1
    return float(sign != calibrate_kks_sign()) + float(env.ctx.kks_sign != calibrate_kks_sign())


COTANGENT_SUITE = [
    check_mu_iota_inverse,
    check_mu_base_value,
    check_energy_pairing,
    check_vertical_closed_form,
    check_theta_orbit_generator,
    check_theta_minus_compact,
    check_theta_minus_control,
    check_mu_equivariance,
    check_flow_matches_action,
    check_cocycle_vanishing,
    check_symplectic_pullback,
    check_hamiltonian_energy,
    check_bracket_lift,
    check_bracket_mixed,
    check_bracket_vertical,
    check_theta_homomorphism,
    check_transitivity,
    check_isotropy,
    check_calibrated_sign,
]
