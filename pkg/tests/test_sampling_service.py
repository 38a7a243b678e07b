"""
Unit Tests for SamplingService

Tests seeded generators and the random inputs used by the checks.
"""

import numpy as np
import pytest

from core.lagrangian import GraphSpec
from core.orbit import Characteristic
from core.weylgrp import ThetaSet
from services.sampling_service import (
    SamplingService,
    sample_group_element,
    sample_unitary,
)


@pytest.fixture
def ch():
    return Characteristic.from_theta(3, ThetaSet.of([1]))


class TestGenerators:
    """Test per-sample generators."""

    def test_seed_xor_index(self):
        a = SamplingService.sample_rng(42, 5).standard_normal(3)
        b = np.random.default_rng(42 ^ 5).standard_normal(3)
        np.testing.assert_array_equal(a, b)

    def test_rngs_are_independent_of_order(self):
        listed = [rng.uniform() for rng in SamplingService.sample_rngs(7, 4)]
        assert listed[2] == SamplingService.sample_rng(7, 2).uniform()


class TestMatrices:
    """Test sampled matrices."""

    def test_traceless(self):
        Z = SamplingService.sample_traceless(4, np.random.default_rng(0), radius=3.0)
        assert abs(np.trace(Z)) < 1e-12
        assert np.linalg.norm(Z) <= 3.0

    def test_zero_radius(self):
        Z = SamplingService.sample_traceless(3, np.random.default_rng(0), radius=0.0)
        assert not Z.any()

    def test_hermitian_parts(self):
        rng = np.random.default_rng(1)
        X = SamplingService.sample_hermitian(3, rng)
        A = SamplingService.sample_anti_hermitian(3, rng)
        np.testing.assert_allclose(X, X.conj().T)
        np.testing.assert_allclose(A, -A.conj().T)

    def test_group_element_has_unit_determinant(self):
        g = SamplingService.sample_group_element(3, np.random.default_rng(2))
        assert abs(np.linalg.det(g) - 1.0) < 1e-10

    def test_unitary(self):
        u = SamplingService.sample_unitary(4, np.random.default_rng(3))
        np.testing.assert_allclose(u.conj().T @ u, np.eye(4), atol=1e-12)

    def test_convenience_wrappers_share_streams(self):
        a = sample_unitary(np.random.default_rng(9), 3)
        b = SamplingService.sample_unitary(3, np.random.default_rng(9))
        np.testing.assert_array_equal(a, b)
        g = sample_group_element(np.random.default_rng(9), 3, radius=1.0)
        h = SamplingService.sample_group_element(3, np.random.default_rng(9), radius=1.0)
        np.testing.assert_array_equal(g, h)


class TestOrbitSamples:
    """Test orbit points, covectors and flag points."""

    def test_zero_radius_gives_base_point(self, ch):
        p = SamplingService.sample_orbit_point(ch, np.random.default_rng(0), radius=0.0)
        np.testing.assert_allclose(p.Y, ch.H0, atol=1e-12)

    def test_covector_momentum_is_upper(self, ch):
        xi = SamplingService.sample_covector(ch, np.random.default_rng(4))
        Wp = xi.k.conj().T @ xi.W @ xi.k
        assert np.allclose(Wp * ~ch.upper_mask, 0, atol=1e-9)

    def test_flag_point_spectrum(self, ch):
        x = SamplingService.sample_flag_point(ch, np.random.default_rng(5))
        np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(x))[::-1], ch.h, atol=1e-12)

    def test_word(self):
        word = SamplingService.sample_word(3, np.random.default_rng(6), letters=2)
        assert len(word) == 2
        assert all(np.linalg.norm(Z) <= 0.5 for Z in word)


class TestGraphSpecs:
    """Test graph map sampling."""

    def test_plain(self):
        spec = SamplingService.sample_graph_spec(3, np.random.default_rng(0), "plain")
        np.testing.assert_allclose(spec.effective, np.eye(3))

    def test_random_is_unitary(self):
        spec = SamplingService.sample_graph_spec(3, np.random.default_rng(0), "random")
        assert isinstance(spec, GraphSpec)
        u = spec.effective
        np.testing.assert_allclose(u.conj().T @ u, np.eye(3), atol=1e-12)

    def test_torus_has_unit_determinant(self):
        spec = SamplingService.sample_graph_spec(4, np.random.default_rng(1), "torus")
        m = spec.effective
        np.testing.assert_allclose(m, np.diag(np.diag(m)))
        assert abs(np.linalg.det(m) - 1.0) < 1e-12

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            SamplingService.sample_graph_spec(3, np.random.default_rng(0), "mobius")
