"""
Weyl Group Checks

Representatives in SU(n), the principal involution with its duality on
flag types, and the right Weyl action on regular orbit points.
"""

import logging
from itertools import islice

import numpy as np

from core.weylgrp import (
    WeylElement,
    all_elements,
    dual_theta,
    identity,
    principal_involution,
    representative,
    right_action,
    right_action_in_frame,
)
from services.sampling_service import SamplingService
from tools.check_base import CheckEnv, structured_check
from utils.linalg_utils import dagger, norm, scale_of

logger = logging.getLogger(__name__)

# S_n grows fast; representative checks stop after this many elements
MAX_WEYL_ELEMENTS = 720


def _random_element(rng: np.random.Generator, n: int) -> WeylElement:
    return WeylElement(tuple(int(i) for i in rng.permutation(n)))


def _regular_point(env: CheckEnv, rng: np.random.Generator) -> np.ndarray:
    g = SamplingService.sample_group_element(env.cfg.n, rng, radius=1.0)
    return g @ env.regular.H0 @ np.linalg.inv(g)


@structured_check("weyl.representatives")
def check_representatives(env: CheckEnv) -> float:
    """P(w) is special unitary and moves h_i to position w(i)."""
    n = env.cfg.n
    h = env.regular.h
    worst = 0.0
    for w in islice(all_elements(n), MAX_WEYL_ELEMENTS):
        P = representative(w)
        expected = np.zeros(n)
        for i, image in enumerate(w.perm):
            expected[image] = h[i]
        moved = P @ np.diag(h) @ dagger(P)
        worst = max(
            worst,
            norm(dagger(P) @ P - np.eye(n)),
            abs(np.linalg.det(P) - 1.0),
            norm(moved - np.diag(expected)),
        )
    return worst


@structured_check("weyl.principal_involution")
def check_principal_involution(env: CheckEnv) -> float:
    n = env.cfg.n
    w0 = principal_involution(n)
    failures = 0
    failures += w0.length() != n * (n - 1) // 2
    failures += w0.compose(w0) != identity(n)
    theta = env.ch.theta
    failures += dual_theta(dual_theta(theta, n), n) != theta
    # Theta* must describe the flag of -H0
    failures += dual_theta(theta, n) != env.ch.dual().theta
    return float(failures)


@structured_check("weyl.right_action")
def check_right_action(env: CheckEnv) -> float:
    """R_w(R_v(x)) = R_{v w}(x)."""
    n = env.cfg.n

    def residual(rng: np.random.Generator) -> float:
        x = _regular_point(env, rng)
        v, w = _random_element(rng, n), _random_element(rng, n)
        lhs = right_action(right_action(x, v), w)
        rhs = right_action(x, v.compose(w))
        return norm(lhs - rhs) / scale_of(x)
    return env.max_over_samples(residual, cap=30)


@structured_check("weyl.right_action_equivariance")
def check_right_action_equivariance(env: CheckEnv) -> float:
    n = env.cfg.n

    def residual(rng: np.random.Generator) -> float:
        x = _regular_point(env, rng)
        w = _random_element(rng, n)
        g = SamplingService.sample_group_element(n, rng, radius=1.0)
        g_inv = np.linalg.inv(g)
        lhs = right_action(g @ x @ g_inv, w)
        rhs = g @ right_action(x, w) @ g_inv
        return norm(lhs - rhs) / scale_of(lhs, rhs)
    return env.max_over_samples(residual, cap=30)


@structured_check("weyl.phase_independence")
def check_phase_independence(env: CheckEnv) -> float:
    """Two diagonalizers differing by a torus element give the same R_w(x)."""
    n = env.cfg.n
    h = env.regular.h.astype(complex)

    def residual(rng: np.random.Generator) -> float:
        g = SamplingService.sample_group_element(n, rng, radius=1.0)
        w = _random_element(rng, n)
        phases = np.exp(1j * rng.uniform(0.0, 2 * np.pi, n)) * rng.uniform(0.5, 2.0, n)
        first = right_action_in_frame(g, h, w)
        second = right_action_in_frame(g @ np.diag(phases), h, w)
        solved = right_action(g @ np.diag(h) @ np.linalg.inv(g), w)
        return max(norm(first - second), norm(first - solved)) / scale_of(first)
    return env.max_over_samples(residual, cap=30)


WEYL_SUITE = [
    check_representatives,
    check_principal_involution,
    check_right_action,
    check_right_action_equivariance,
    check_phase_independence,
]
