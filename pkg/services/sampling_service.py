"""
Sampling Service - Deterministic Random Inputs

Handles seeded sampling for the verification suites:
- Per-sample generators derived from a base seed
- Unitary and SL(n, C) group elements
- Orbit points, covectors and algebra elements
- Flag points and graph maps for the Lagrangean checks

Every sampler takes an explicit numpy Generator; nothing reads global state.
"""

import logging
from typing import Iterator, List

import numpy as np
import scipy.linalg

from config import SAMPLE_RADIUS
from core.cotangent import CotangentPoint, iota
from core.lagrangian import GraphSpec
from core.liealg import AlgebraCtx
from core.orbit import Characteristic, OrbitPoint, factorize
from utils.linalg_utils import haar_unitary

logger = logging.getLogger(__name__)


# ============================================================================
# SAMPLING SERVICE
# ============================================================================

class SamplingService:
    """Service for seeded random inputs."""

    @staticmethod
    def sample_rng(seed: int, index: int) -> np.random.Generator:
        """
        Generator for one sample, independent of evaluation order.

        Args:
            seed: Base seed of the run
            index: Sample index

        Returns:
            numpy Generator seeded with seed ^ index
        """
        return np.random.default_rng(int(seed) ^ int(index))

    @staticmethod
    def sample_rngs(seed: int, count: int) -> Iterator[np.random.Generator]:
        for index in range(count):
            yield SamplingService.sample_rng(seed, index)

    @staticmethod
    def sample_algebra(ctx: AlgebraCtx, rng: np.random.Generator) -> np.ndarray:
        """Gaussian element of sl(n, C) with respect to the real basis."""
        coeffs = rng.standard_normal(len(ctx.real_basis))
        return np.tensordot(coeffs, np.array(ctx.real_basis), axes=1)

    @staticmethod
    def sample_traceless(n: int, rng: np.random.Generator, radius: float = SAMPLE_RADIUS) -> np.ndarray:
        """Gaussian traceless matrix rescaled to norm radius * U(0, 1)."""
        Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        Z -= (np.trace(Z) / n) * np.eye(n)
        size = np.linalg.norm(Z)
        if radius == 0 or size == 0:
            return np.zeros((n, n), dtype=complex)
        return Z * (radius * rng.uniform() / size)

    @staticmethod
    def sample_hermitian(n: int, rng: np.random.Generator, radius: float = 1.0) -> np.ndarray:
        Z = SamplingService.sample_traceless(n, rng, radius)
        return (Z + Z.conj().T) / 2

    @staticmethod
    def sample_anti_hermitian(n: int, rng: np.random.Generator, radius: float = 1.0) -> np.ndarray:
        Z = SamplingService.sample_traceless(n, rng, radius)
        return (Z - Z.conj().T) / 2

    @staticmethod
    def sample_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
        """Haar-like element of SU(n)."""
        return haar_unitary(rng, n)

    @staticmethod
    def sample_group_element(n: int, rng: np.random.Generator, radius: float = SAMPLE_RADIUS) -> np.ndarray:
        """exp(Z) for a Gaussian traceless Z with ||Z|| <= radius; det = 1."""
        return scipy.linalg.expm(SamplingService.sample_traceless(n, rng, radius))

    @staticmethod
    def sample_orbit_point(
        ch: Characteristic,
        rng: np.random.Generator,
        radius: float = SAMPLE_RADIUS,
    ) -> OrbitPoint:
        """
        Y = Ad(exp Z) H0, factorized.

        radius = 0 returns H0 itself.
        """
        g = SamplingService.sample_group_element(ch.n, rng, radius)
        Y = g @ ch.H0 @ scipy.linalg.inv(g)
        return factorize(ch, Y)

    @staticmethod
    def sample_covector(
        ch: Characteristic,
        rng: np.random.Generator,
        radius: float = SAMPLE_RADIUS,
    ) -> CotangentPoint:
        return iota(ch, SamplingService.sample_orbit_point(ch, rng, radius))

    @staticmethod
    def sample_word(n: int, rng: np.random.Generator, letters: int, radius: float = 0.5) -> List[np.ndarray]:
        """Letters Z_1..Z_m of a word exp(Z_1)...exp(Z_m)."""
        return [SamplingService.sample_traceless(n, rng, radius) for _ in range(letters)]

    @staticmethod
    def sample_flag_point(ch: Characteristic, rng: np.random.Generator) -> np.ndarray:
        """Ad(u) H0 for a Haar unitary u."""
        u = haar_unitary(rng, ch.n)
        return u @ ch.H0 @ u.conj().T

    @staticmethod
    def sample_graph_spec(n: int, rng: np.random.Generator, kind: str = "random") -> GraphSpec:
        """
        Graph map of the given kind.

        Args:
            n: Matrix size
            rng: Generator
            kind: "plain" (R_{w0}), "random" (k1 o R_{w0} o k2, Haar k1, k2) or
                "torus" (m o R_{w0}, m = diag(exp(i phi)) with sum(phi) = 0)

        Raises:
            ValueError: If kind is unknown
        """
        if kind == "plain":
            return GraphSpec.plain(n)
        if kind == "random":
            return GraphSpec(k1=haar_unitary(rng, n), k2=haar_unitary(rng, n))
        if kind == "torus":
            angles = rng.uniform(-np.pi, np.pi, n)
            angles -= angles.mean()
            eye = np.eye(n, dtype=complex)
            return GraphSpec(k1=eye, k2=eye, m=np.diag(np.exp(1j * angles)))
        raise ValueError(f"Unknown graph kind: {kind}")


# ============================================================================
# CONVENIENCE FUNCTIONS
# ============================================================================

def sample_orbit_point(ch: Characteristic, rng: np.random.Generator, radius: float = SAMPLE_RADIUS) -> OrbitPoint:
    """Convenience wrapper for orbit point sampling."""
    return SamplingService.sample_orbit_point(ch, rng, radius)


def sample_group_element(rng: np.random.Generator, n: int, radius: float = SAMPLE_RADIUS) -> np.ndarray:
    """Convenience wrapper for group element sampling."""
    return SamplingService.sample_group_element(n, rng, radius)


def sample_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Convenience wrapper for unitary sampling."""
    return SamplingService.sample_unitary(n, rng)
