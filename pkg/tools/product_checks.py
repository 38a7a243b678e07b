"""
Flag Product Checks

The open orbit in F_Theta x F_Theta*: transversality of embedded pairs, the
n = 2 Weyl census, equivariance of the orbit identification, the product
complex structure, the isotropy certificate and the SL(2) dictionary.
"""

import logging

import numpy as np

from core.flagprod import (
    embed,
    hermitian_of_line_sl2,
    orbit_to_pair,
    pair_distance,
    pair_to_matrix_sl2,
    product_complex_structure_residual,
    product_isotropy,
    sl2_antipodal,
    transversal,
    weyl_pair_census,
)
from core.orbit import Characteristic
from services.sampling_service import SamplingService
from tools.check_base import CheckEnv, structured_check
from utils.linalg_utils import norm, same_line, scale_of

logger = logging.getLogger(__name__)

SL2 = Characteristic.from_diagonal([1.0, -1.0])


@structured_check("product.embed_transversal")
def check_embed_transversal(env: CheckEnv) -> float:
    ch = env.ch

    def misses(rng: np.random.Generator) -> float:
        g = SamplingService.sample_group_element(ch.n, rng)
        return float(not transversal(embed(ch, g)))
    return env.sum_over_samples(misses, cap=100)


@structured_check("product.weyl_census")
def check_weyl_census(env: CheckEnv) -> float:
    diagonal, open_orbit = weyl_pair_census(2)
    return float(abs(diagonal - 2) + abs(open_orbit - 2))


@structured_check("product.orbit_pair_equivariance")
def check_orbit_pair_equivariance(env: CheckEnv) -> float:
    """orbit_to_pair(Ad(g) H0) = g.(x0, w0~y0) = embed(g)."""
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        g = SamplingService.sample_group_element(ch.n, rng)
        Y = g @ ch.H0 @ np.linalg.inv(g)
        return pair_distance(orbit_to_pair(ch, Y), embed(ch, g))
    return env.max_over_samples(residual, cap=30)


@structured_check("product.orbit_pair_transversal")
def check_orbit_pair_transversal(env: CheckEnv) -> float:
    ch = env.ch

    def misses(rng: np.random.Generator) -> float:
        p = SamplingService.sample_orbit_point(ch, rng)
        return float(not transversal(orbit_to_pair(ch, p)))
    return env.sum_over_samples(misses, cap=50)


@structured_check("product.complex_structure")
def check_complex_structure(env: CheckEnv) -> float:
    ch = env.ch

    def residual(rng: np.random.Generator) -> float:
        p = SamplingService.sample_orbit_point(ch, rng)
        return product_complex_structure_residual(ch, p) / scale_of(p.Y)
    return max(
        product_complex_structure_residual(ch, ch.H0),
        env.max_over_samples(residual, cap=30),
    )


@structured_check("product.complex_structure_control")
def check_complex_structure_control(env: CheckEnv) -> float:
    ch = env.ch

    def observed(rng: np.random.Generator) -> float:
        p = SamplingService.sample_orbit_point(ch, rng)
        return product_complex_structure_residual(ch, p, sign=-1.0)
    return env.min_over_samples(observed, cap=10)


@structured_check("product.isotropy")
def check_isotropy(env: CheckEnv) -> float:
    """The kernel at (H0, -H0) is z_Theta: real dimension 2 (sum of squared block sizes - 1)."""
    ch = env.ch
    kernel_dim, leak = product_isotropy(ch)
    expected = 2 * (sum(s * s for s in ch.block_sizes) - 1)
    return float(abs(kernel_dim - expected) + (leak > 1e-8))


@structured_check("product.sl2_dictionary")
def check_sl2_dictionary(env: CheckEnv) -> float:
    """Worked SL(2) values plus eigenline and round-trip checks on random transversal pairs."""
    e1 = np.array([1.0, 0.0])
    e2 = np.array([0.0, 1.0])
    d = np.array([1.0, 1.0])
    lower = np.array([[1.0, 0.0], [2.0, -1.0]])

    worst = max(
        norm(pair_to_matrix_sl2(e1, e2) - np.diag([1.0, -1.0])),
        norm(pair_to_matrix_sl2(d, e2) - lower),
        norm(hermitian_of_line_sl2(e1) - np.diag([1.0, -1.0])),
        norm(hermitian_of_line_sl2(e2) - np.diag([-1.0, 1.0])),
        norm(hermitian_of_line_sl2(d / np.sqrt(2)) - np.array([[0.0, 1.0], [1.0, 0.0]])),
    )
    pair = orbit_to_pair(SL2, lower)
    worst = max(
        worst,
        same_line(pair.first.subspaces[0], d),
        same_line(pair.second.subspaces[0], e2),
    )

    def residual(rng: np.random.Generator) -> float:
        xi = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        eta = rng.standard_normal(2) + 1j * rng.standard_normal(2)
        M = pair_to_matrix_sl2(xi, eta)
        back = orbit_to_pair(SL2, M)
        eigen = norm(M @ xi - xi) / norm(xi) + norm(M @ eta + eta) / norm(eta)
        round_trip = same_line(back.first.subspaces[0], xi) + same_line(back.second.subspaces[0], eta)
        # R_w0 is antipodal: the pair (xi, xi-perp) is the Hermitian matrix of xi
        herm = norm(pair_to_matrix_sl2(xi, sl2_antipodal(xi)) - hermitian_of_line_sl2(xi))
        antipodal = norm(hermitian_of_line_sl2(sl2_antipodal(xi)) + hermitian_of_line_sl2(xi))
        return max(eigen / scale_of(M), round_trip, herm, antipodal)
    return max(worst, env.max_over_samples(residual, cap=50))


PRODUCT_SUITE = [
    check_embed_transversal,
    check_weyl_census,
    check_orbit_pair_equivariance,
    check_orbit_pair_transversal,
    check_complex_structure,
    check_complex_structure_control,
    check_isotropy,
    check_sl2_dictionary,
]
