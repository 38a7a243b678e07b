"""
Unit Tests for the Cotangent Model

Tests iota, the moment map, the infinitesimal action, exact and integrated
group actions, and the calibration of the KKS sign.
"""

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings, strategies as st

from core.cotangent import (
    act,
    ambient_field,
    calibrate_kks_sign,
    calibrated_context,
    canonical_two_form,
    cocycle,
    cotangent_point,
    energy,
    field_bracket,
    flow,
    iota,
    iota_inverse,
    mu,
    orbit_generator_image,
    theta_field,
    vertical_field,
    vertical_field_closed_form,
    word_element,
    zero_covector,
)
from core.errors import IntegrationDivergedError, NotTangentError
from core.liealg import real_pairing
from core.orbit import Characteristic, kks_form
from core.weylgrp import ThetaSet
from services.sampling_service import SamplingService
from tests import SL2_H0
from utils.linalg_utils import comm, norm


@pytest.fixture
def sl2():
    return Characteristic.from_theta(2, ThetaSet())


@pytest.fixture
def partial3():
    return Characteristic.from_theta(3, ThetaSet.of([1]))


class TestIota:
    """Test the orbit / cotangent identification."""

    def test_sl2_example(self, sl2):
        xi = iota(sl2, np.array([[1, 1], [0, -1]], dtype=complex))
        np.testing.assert_allclose(xi.base, SL2_H0, atol=1e-12)
        assert abs(abs(xi.W[0, 1]) - 1.0) < 1e-12
        assert abs(xi.W[1, 0]) < 1e-12

    def test_round_trip(self, partial3):
        p = SamplingService.sample_orbit_point(partial3, np.random.default_rng(4))
        xi = iota(partial3, p)
        np.testing.assert_allclose(iota_inverse(xi), p.Y, atol=1e-9 * np.linalg.norm(p.Y))
        np.testing.assert_allclose(xi.base, xi.base.conj().T, atol=1e-12)

    def test_zero_covector(self, sl2):
        xi = zero_covector(sl2)
        np.testing.assert_allclose(xi.Y, SL2_H0)
        assert not xi.W.any()

    def test_cotangent_point_rejects_lower_momentum(self, sl2):
        with pytest.raises(NotTangentError):
            cotangent_point(sl2, SL2_H0, np.array([[0, 0], [1, 0]], dtype=complex))


class TestMomentMap:
    """Test energy functions and mu."""

    def test_zero_section_value(self, sl2):
        m = mu(calibrated_context(2), sl2, zero_covector(sl2))
        np.testing.assert_allclose(m, SL2_H0, atol=1e-10)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_inverts_iota(self, partial3, seed):
        p = SamplingService.sample_orbit_point(partial3, np.random.default_rng(seed))
        m = mu(calibrated_context(3), partial3, iota(partial3, p))
        np.testing.assert_allclose(m, p.Y, atol=1e-8 * max(1.0, np.linalg.norm(p.Y)))

    def test_energy_is_pairing(self, sl2):
        ctx = calibrated_context(2)
        rng = np.random.default_rng(9)
        p = SamplingService.sample_orbit_point(sl2, rng)
        Z = SamplingService.sample_algebra(ctx, rng)
        assert energy(ctx, sl2, Z, iota(sl2, p)) == pytest.approx(real_pairing(ctx, p.Y, Z), rel=1e-8, abs=1e-8)


class TestInfinitesimalAction:
    """Test theta(Z) against the orbit generator."""

    @settings(max_examples=10, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_theta_matches_orbit(self, seed):
        ch = Characteristic.from_theta(3, ThetaSet())
        ctx = calibrated_context(3)
        rng = np.random.default_rng(seed)
        xi = SamplingService.sample_covector(ch, rng)
        Z = SamplingService.sample_algebra(ctx, rng)
        gap = theta_field(ctx, ch, Z, xi) - orbit_generator_image(ch, Z, xi)
        assert gap.norm() <= 1e-7 * max(1.0, norm(xi.Y), norm(Z))

    def test_vertical_closed_form(self, partial3):
        ctx = calibrated_context(3)
        rng = np.random.default_rng(21)
        xi = SamplingService.sample_covector(partial3, rng)
        X = SamplingService.sample_hermitian(3, rng)
        solved = vertical_field(ctx, partial3, X, xi)
        np.testing.assert_allclose(solved, vertical_field_closed_form(partial3, X, xi), atol=1e-8)

    def test_variants_agree_on_compact_part(self, sl2):
        ctx = calibrated_context(2)
        rng = np.random.default_rng(5)
        xi = SamplingService.sample_covector(sl2, rng)
        A = SamplingService.sample_anti_hermitian(2, rng)
        gap = theta_field(ctx, sl2, A, xi, "plus") - theta_field(ctx, sl2, A, xi, "minus")
        assert gap.norm() < 1e-9

    def test_variants_differ_on_hermitian_part(self, sl2):
        ctx = calibrated_context(2)
        X = np.array([[0, 1], [1, 0]], dtype=complex)
        xi = zero_covector(sl2)
        gap = theta_field(ctx, sl2, X, xi, "plus") - theta_field(ctx, sl2, X, xi, "minus")
        assert gap.norm() > 0.1

    @pytest.mark.parametrize("seed", [0, 1])
    def test_theta_is_homomorphism(self, partial3, seed):
        ctx = calibrated_context(3)
        rng = np.random.default_rng(seed)
        xi = SamplingService.sample_covector(partial3, rng, radius=1.0)
        Z1 = SamplingService.sample_traceless(3, rng, 1.0)
        Z2 = SamplingService.sample_traceless(3, rng, 1.0)
        bracket = field_bracket(
            ambient_field(ctx, partial3, "theta", Z1),
            ambient_field(ctx, partial3, "theta", Z2),
            xi,
            1e-3,
        )
        expected = theta_field(ctx, partial3, comm(Z1, Z2), xi)
        assert (bracket - expected).norm() <= 1e-3 * max(1.0, expected.norm())


class TestGroupAction:
    """Test act, flow and the cocycle."""

    def test_flow_reaches_exact_action(self, sl2):
        ctx = calibrated_context(2)
        rng = np.random.default_rng(3)
        xi = SamplingService.sample_covector(sl2, rng, radius=1.0)
        Z = SamplingService.sample_traceless(2, rng, 0.3)
        flowed = flow(ctx, sl2, Z, xi, 1.0, steps=50)
        exact = act(sl2, scipy.linalg.expm(Z), xi)
        assert norm(flowed.Y - exact.Y) <= 1e-4 * max(1.0, norm(exact.Y))

    def test_zero_time_is_identity(self, sl2):
        xi = zero_covector(sl2)
        assert flow(calibrated_context(2), sl2, SL2_H0, xi, 0.0) is xi

    def test_non_finite_time(self, sl2):
        with pytest.raises(IntegrationDivergedError):
            flow(calibrated_context(2), sl2, SL2_H0, zero_covector(sl2), float("nan"))

    def test_compact_action_moves_base(self, sl2):
        u = SamplingService.sample_unitary(2, np.random.default_rng(8))
        moved = act(sl2, u, zero_covector(sl2))
        np.testing.assert_allclose(moved.base, u @ SL2_H0 @ u.conj().T, atol=1e-10)
        assert norm(moved.W) < 1e-10

    def test_empty_word_cocycle(self, sl2):
        c = cocycle(calibrated_context(2), sl2, [], zero_covector(sl2))
        assert not c.any()

    def test_word_element(self):
        Z = np.array([[0, 1], [0, 0]], dtype=complex)
        np.testing.assert_allclose(word_element([Z, Z]), scipy.linalg.expm(2 * Z))
        with pytest.raises(ValueError):
            word_element([])


class TestCalibration:
    """Test the KKS sign."""

    def test_sign_is_unit(self):
        assert calibrate_kks_sign() in (1, -1)

    def test_context_carries_sign(self):
        assert calibrated_context(3).kks_sign == calibrate_kks_sign()

    def test_canonical_form_matches_kks(self, sl2):
        """Omega(theta(Z1), theta(Z2)) equals the calibrated KKS form at mu(xi)."""
        ctx = calibrated_context(2)
        rng = np.random.default_rng(5)
        xi = SamplingService.sample_covector(sl2, rng, radius=1.0)
        Z1 = SamplingService.sample_traceless(2, rng, 1.0)
        Z2 = SamplingService.sample_traceless(2, rng, 1.0)
        V1 = theta_field(ctx, sl2, Z1, xi)
        V2 = theta_field(ctx, sl2, Z2, xi)
        expected = kks_form(ctx, sl2, iota_inverse(xi), Z1, Z2)
        omega = canonical_two_form(ctx, sl2, xi, V1, V2)
        assert abs(omega - expected) <= 1e-3 * max(1.0, abs(expected))

    def test_canonical_form_is_antisymmetric(self, sl2):
        ctx = calibrated_context(2)
        rng = np.random.default_rng(6)
        xi = SamplingService.sample_covector(sl2, rng, radius=1.0)
        V = theta_field(ctx, sl2, SamplingService.sample_traceless(2, rng, 1.0), xi)
        assert canonical_two_form(ctx, sl2, xi, V, V) == pytest.approx(0.0, abs=1e-12)
