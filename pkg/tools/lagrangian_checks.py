"""
Lagrangean Graph Checks

Borel metric and complex structure on F_{H0}, the Kaehler form, R_{w0}
with its anti-holomorphy and isometry, Lagrangean graphs of
k1 o R_{w0} o k2 and m o R_{w0}, and the explicit SL(2) pictures.
"""

import logging
from itertools import islice

import numpy as np

from core.flagprod import (
    cp1_grid,
    fixed_line_defect,
    fixed_line_scan,
    sl2_antipodal,
    sl2_graph_matrix,
    sl2_rotation,
    sl2_torus_reflection,
)
from core.lagrangian import (
    GraphSpec,
    antiholomorphy_residual,
    borel_metric,
    closedness_defect,
    complex_structure,
    graph_pushforward_defect,
    graph_rank,
    isometry_residual,
    k_orbit_deviation,
    kaehler_form,
    lagrangian_residual,
    lagrangian_residual_at,
    r_w0_map,
    weyl_point_rule_residual,
)
from core.liealg import root_plane_vectors
from core.weylgrp import all_elements
from services.sampling_service import SamplingService
from tools.check_base import CheckEnv, structured_check
from utils.linalg_utils import comm, dagger, norm, scale_of

logger = logging.getLogger(__name__)

# all of S_n up to n = 4, a prefix of the larger groups
WEYL_POINT_LIMIT = 24


def _tangent(x: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    A = SamplingService.sample_anti_hermitian(x.shape[0], rng)
    return comm(A, x)


# ============================================================================
# METRIC, COMPLEX STRUCTURE, KAEHLER FORM
# ============================================================================

@structured_check("lagrangian.borel_metric")
def check_borel_metric(env: CheckEnv) -> float:
    """At H0 the root planes are orthogonal with squared length alpha(H0)."""
    ch = env.ch
    x = ch.H0
    worst = 0.0
    for i, j in zip(*np.nonzero(ch.upper_mask)):
        alpha = ch.h[i] - ch.h[j]
        A, Z = root_plane_vectors(ch.n, (int(i), int(j)))
        At, Zt = comm(A, x), comm(Z, x)
        worst = max(
            worst,
            abs(borel_metric(ch, x, At, At) - alpha),
            abs(borel_metric(ch, x, At, Zt)),
            abs(borel_metric(ch, x, Zt, Zt) - alpha),
        )
    return worst


@structured_check("lagrangian.metric_invariance")
def check_metric_invariance(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        x = SamplingService.sample_flag_point(ch, rng)
        v, w = _tangent(x, rng), _tangent(x, rng)
        u = SamplingService.sample_unitary(ch.n, rng)
        here = borel_metric(ch, x, v, w)
        moved = borel_metric(ch, u @ x @ dagger(u), u @ v @ dagger(u), u @ w @ dagger(u))
        return abs(moved - here) / max(1.0, abs(here))
    return env.max_over_samples(residual, cap=30)


@structured_check("lagrangian.complex_structure")
def check_complex_structure(env: CheckEnv) -> float:
    """J A~ = Z~ and J Z~ = -A~ at H0, and J^2 = -1 at sampled points."""
    ch = env.ch
    x = ch.H0
    worst = 0.0
    for i, j in zip(*np.nonzero(ch.upper_mask)):
        A, Z = root_plane_vectors(ch.n, (int(i), int(j)))
        At, Zt = comm(A, x), comm(Z, x)
        worst = max(
            worst,
            norm(complex_structure(ch, x, At) - Zt),
            norm(complex_structure(ch, x, Zt) + At),
        )

    def residual(rng: np.random.Generator) -> float:
        y = SamplingService.sample_flag_point(ch, rng)
        v = _tangent(y, rng)
        JJv = complex_structure(ch, y, complex_structure(ch, y, v))
        return norm(JJv + v) / scale_of(v)
    return max(worst, env.max_over_samples(residual, cap=30))


@structured_check("lagrangian.weyl_point_rule")
def check_weyl_point_rule(env: CheckEnv) -> float:
    ch = env.ch
    return max(
        weyl_point_rule_residual(ch, w)
        for w in islice(all_elements(ch.n), WEYL_POINT_LIMIT)
    )


@structured_check("lagrangian.kaehler_antisymmetry")
def check_kaehler_antisymmetry(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        x = SamplingService.sample_flag_point(ch, rng)
        v, w = _tangent(x, rng), _tangent(x, rng)
        swap = abs(kaehler_form(ch, x, v, w) + kaehler_form(ch, x, w, v))
        diagonal = abs(kaehler_form(ch, x, v, v))
        return (swap + diagonal) / max(1.0, abs(borel_metric(ch, x, v, v)))
    return env.max_over_samples(residual, cap=30)


@structured_check("lagrangian.kaehler_closed")
def check_kaehler_closed(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        x = SamplingService.sample_flag_point(ch, rng)
        generators = [SamplingService.sample_anti_hermitian(ch.n, rng) for _ in range(3)]
        return closedness_defect(ch, x, generators)
    return env.max_over_samples(residual, cap=5)


# ============================================================================
# R_{w0}
# ============================================================================

@structured_check("lagrangian.r_w0_equivariance")
def check_r_w0_equivariance(env: CheckEnv) -> float:
    ch = env.ch
    worst = norm(r_w0_map(ch, ch.H0) + ch.H0)

    def residual(rng: np.random.Generator) -> float:
        x = SamplingService.sample_flag_point(ch, rng)
        u = SamplingService.sample_unitary(ch.n, rng)
        lhs = r_w0_map(ch, u @ x @ dagger(u))
        rhs = u @ r_w0_map(ch, x) @ dagger(u)
        return norm(lhs - rhs) / scale_of(rhs)
    return max(worst, env.max_over_samples(residual, cap=30))


@structured_check("lagrangian.antiholomorphy")
def check_antiholomorphy(env: CheckEnv) -> float:
    return antiholomorphy_residual(env.ch, env.count(10), env.cfg.seed)


@structured_check("lagrangian.antiholomorphy_control")
def check_antiholomorphy_control(env: CheckEnv) -> float:
    return antiholomorphy_residual(env.ch, env.count(10), env.cfg.seed, flip=True)


@structured_check("lagrangian.isometry")
def check_isometry(env: CheckEnv) -> float:
    return isometry_residual(env.ch, env.count(10), env.cfg.seed)


@structured_check("lagrangian.isometry_control")
def check_isometry_control(env: CheckEnv) -> float:
    return isometry_residual(env.ch, env.count(10), env.cfg.seed, scale=2.0)


# ============================================================================
# GRAPHS
# ============================================================================

@structured_check("lagrangian.graph_plain")
def check_graph_plain(env: CheckEnv) -> float:
    ch = env.ch
    return lagrangian_residual(ch, GraphSpec.plain(ch.n), env.count(20), env.cfg.seed)


@structured_check("lagrangian.graph_random")
def check_graph_random(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        spec = SamplingService.sample_graph_spec(ch.n, rng)
        return lagrangian_residual_at(ch, spec, SamplingService.sample_flag_point(ch, rng))
    return env.max_over_samples(residual, cap=10)


@structured_check("lagrangian.graph_torus")
def check_graph_torus(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        spec = SamplingService.sample_graph_spec(ch.n, rng, "torus")
        return lagrangian_residual_at(ch, spec, SamplingService.sample_flag_point(ch, rng))
    return env.max_over_samples(residual, cap=10)


@structured_check("lagrangian.graph_identity_control")
def check_graph_identity_control(env: CheckEnv) -> float:
    """The identity needs a self-dual flag; the regular one stands in otherwise."""
    ch = env.ch if env.ch.dual() == env.ch else env.regular
    return lagrangian_residual(ch, GraphSpec.identity_map(ch.n), env.count(10), env.cfg.seed)


@structured_check("lagrangian.half_dimension")
def check_half_dimension(env: CheckEnv) -> float:
    ch = env.ch
    expected = 2 * ch.dim_nplus

    def misses(rng: np.random.Generator) -> float:
        x = SamplingService.sample_flag_point(ch, rng)
        specs = [SamplingService.sample_graph_spec(ch.n, rng, kind) for kind in ("plain", "random", "torus")]
        return float(sum(graph_rank(ch, spec, x) != expected for spec in specs))
    return env.sum_over_samples(misses, cap=10)


@structured_check("lagrangian.pushforward")
def check_pushforward(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        spec = SamplingService.sample_graph_spec(ch.n, rng)
        return graph_pushforward_defect(ch, spec, SamplingService.sample_flag_point(ch, rng))
    return env.max_over_samples(residual, cap=5)


@structured_check("lagrangian.k_orbit")
def check_k_orbit(env: CheckEnv) -> float:
    return k_orbit_deviation(env.ch, env.count(50), env.cfg.seed)


# ============================================================================
# SL(2)
# ============================================================================

@structured_check("lagrangian.sl2_fixed_lines")
def check_sl2_fixed_lines(env: CheckEnv) -> float:
    """
    Failures among the SL(2) fixed-line statements.

    r is scanned on the whole grid. m o R_w fixes the circle |x| = |y|, so only
    its two stated lines are certified. The antipodal map fixes no line.
    """
    failures = 0
    rotation_known = [np.array([1.0, 1j]), np.array([1.0, -1j])]
    at_known, spurious = fixed_line_scan(sl2_rotation, rotation_known)
    failures += int(at_known > 1e-12) + spurious

    for xi in (np.array([1.0, 1.0]), np.array([1.0, -1.0])):
        failures += int(fixed_line_defect(sl2_torus_reflection, xi) > 1e-12)

    failures += sum(fixed_line_defect(sl2_antipodal, xi) < 1e-6 for xi in cp1_grid())
    return float(failures)


@structured_check("lagrangian.sl2_graph_matrices")
def check_sl2_graph_matrices(env: CheckEnv) -> float:
    """graph(r) over real unit lines and graph(m o R_w) over |x|^2 - |y|^2 = 1."""

    def residual(rng: np.random.Generator) -> float:
        t = rng.uniform(0.0, 2 * np.pi)
        x, y = np.cos(t), np.sin(t)
        expected = np.array([[x * x - y * y, 2 * x * y], [2 * x * y, y * y - x * x]])
        rotation = norm(sl2_graph_matrix(sl2_rotation, np.array([x, y])) - expected)

        s, a, b = rng.uniform(0.0, 1.0), rng.uniform(0.0, 2 * np.pi), rng.uniform(0.0, 2 * np.pi)
        p, q = np.cosh(s) * np.exp(1j * a), np.sinh(s) * np.exp(1j * b)
        size = abs(p) ** 2 + abs(q) ** 2
        expected = np.array([
            [size, -2 * p * np.conj(q)],
            [2 * q * np.conj(p), -size],
        ])
        torus = norm(sl2_graph_matrix(sl2_torus_reflection, np.array([p, q])) - expected)
        return max(rotation, torus / scale_of(expected))
    return env.max_over_samples(residual, cap=50)


LAGRANGIAN_SUITE = [
    check_borel_metric,
    check_metric_invariance,
    check_complex_structure,
    check_weyl_point_rule,
    check_kaehler_antisymmetry,
    check_kaehler_closed,
    check_r_w0_equivariance,
    check_antiholomorphy,
    check_antiholomorphy_control,
    check_isometry,
    check_isometry_control,
    check_graph_plain,
    check_graph_random,
    check_graph_torus,
    check_graph_identity_control,
    check_half_dimension,
    check_pushforward,
    check_k_orbit,
    check_sl2_fixed_lines,
    check_sl2_graph_matrices,
]
