"""
Unit Tests for the Exterior-Power Model

Tests the representations Lambda^k C^n, the representation moment map,
height functions, phi and the cotangent realization.
"""

import numpy as np
import pytest
import scipy.linalg

from core.cotangent import calibrated_context, iota_inverse
from core.errors import ContractViolation, NotInSLError, NotTransversalError
from core.lagrangian import graph_rep_membership
from core.liealg import build_context
from core.repmodel import (
    RepElement,
    act_element,
    base_element,
    dual_action,
    dual_group,
    exterior_rep,
    flag_covector,
    height_rep,
    isotropy_defect,
    lowered_base_element,
    moment_rep,
    phi,
    phi_inv,
    plucker_vector,
    rep_algebra,
    rep_characteristic,
    rep_group,
    rep_to_cotangent,
)
from core.weylgrp import ThetaSet
from services.sampling_service import SamplingService
from tests import SL2_H0
from utils.linalg_utils import comm


E12 = np.array([[0, 1], [0, 0]], dtype=complex)


class TestExteriorRep:
    """Test construction and the two actions."""

    def test_dimension(self):
        assert exterior_rep(4, 2).dim == 6
        assert exterior_rep(3, 1).dim == 3

    @pytest.mark.parametrize("n,k", [(3, 0), (3, 3), (1, 1)])
    def test_invalid_degree(self, n, k):
        with pytest.raises(ContractViolation):
            exterior_rep(n, k)

    def test_algebra_action_is_homomorphism(self):
        rep = exterior_rep(4, 2)
        rng = np.random.default_rng(0)
        X = SamplingService.sample_traceless(4, rng, 1.0)
        Y = SamplingService.sample_traceless(4, rng, 1.0)
        lhs = rep_algebra(rep, comm(X, Y))
        rhs = comm(rep_algebra(rep, X), rep_algebra(rep, Y))
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    def test_group_action_exponentiates(self):
        rep = exterior_rep(3, 2)
        Z = SamplingService.sample_traceless(3, np.random.default_rng(1), 1.0)
        np.testing.assert_allclose(
            rep_group(rep, scipy.linalg.expm(Z)),
            scipy.linalg.expm(rep_algebra(rep, Z)),
            atol=1e-10,
        )

    def test_dual_action_preserves_pairing(self):
        """(rho*(X) eps)(v) + eps(rho(X) v) = 0."""
        rep = exterior_rep(4, 2)
        rng = np.random.default_rng(2)
        X = SamplingService.sample_traceless(4, rng, 1.0)
        v = rng.normal(size=rep.dim) + 1j * rng.normal(size=rep.dim)
        eps = rng.normal(size=rep.dim) + 1j * rng.normal(size=rep.dim)
        total = (dual_action(rep, X) @ eps) @ v + eps @ (rep_algebra(rep, X) @ v)
        assert abs(total) < 1e-10

    def test_dual_action_exponentiates(self):
        rep = exterior_rep(3, 1)
        Z = SamplingService.sample_traceless(3, np.random.default_rng(3), 1.0)
        np.testing.assert_allclose(
            dual_group(rep, scipy.linalg.expm(Z)),
            scipy.linalg.expm(dual_action(rep, Z)),
            atol=1e-10,
        )

    def test_shape_checks(self):
        with pytest.raises(ContractViolation):
            rep_algebra(exterior_rep(3, 1), np.eye(2))


class TestMomentMap:
    """Test the representation moment map."""

    def test_sl2_base_value(self):
        M = moment_rep(build_context(2), exterior_rep(2, 1), base_element(exterior_rep(2, 1)))
        np.testing.assert_allclose(M, np.diag([0.125, -0.125]), atol=1e-12)

    @pytest.mark.parametrize("n,k", [(3, 1), (4, 2)])
    def test_base_value_is_fundamental_dual(self, n, k):
        ctx = build_context(n)
        rep = exterior_rep(n, k)
        np.testing.assert_allclose(moment_rep(ctx, rep, base_element(rep)), ctx.fundamental_H[k - 1], atol=1e-12)

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_equivariance(self, seed):
        ctx = build_context(3)
        rep = exterior_rep(3, 1)
        g = SamplingService.sample_group_element(3, np.random.default_rng(seed), radius=1.0)
        moved = moment_rep(ctx, rep, act_element(rep, g, base_element(rep)))
        expected = g @ ctx.fundamental_H[0] @ np.linalg.inv(g)
        np.testing.assert_allclose(moved, expected, atol=1e-9 * max(1.0, np.linalg.norm(expected)))

    def test_context_mismatch(self):
        with pytest.raises(ContractViolation):
            moment_rep(build_context(3), exterior_rep(2, 1), base_element(exterior_rep(2, 1)))

    def test_height_at_base(self):
        rep = exterior_rep(2, 1)
        assert height_rep(rep, base_element(rep), SL2_H0) == pytest.approx(1.0)

    def test_isotropy(self):
        ctx = build_context(4)
        assert isotropy_defect(exterior_rep(4, 2), ctx, rep_characteristic(ctx, 2)) < 1e-12


class TestRepCharacteristic:
    """Test the characteristic element of a fundamental weight."""

    @pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 6) for k in range(1, n)])
    def test_theta_omits_only_alpha_k(self, n, k):
        ch = rep_characteristic(calibrated_context(n), k)
        assert ch.theta == ThetaSet.of([i for i in range(1, n) if i != k])
        assert ch.block_sizes == (k, n - k)

    @pytest.mark.parametrize("n,k", [(4, 1), (5, 2)])
    def test_matches_fundamental_dual(self, n, k):
        ctx = calibrated_context(n)
        np.testing.assert_allclose(rep_characteristic(ctx, k).H0, ctx.fundamental_H[k - 1], atol=1e-12)

    def test_first_weight_of_sl4(self):
        assert rep_characteristic(calibrated_context(4), 1).diagonal == (0.09375, -0.03125, -0.03125, -0.03125)

    @pytest.mark.parametrize("k", [0, 4])
    def test_out_of_range(self, k):
        with pytest.raises(ContractViolation):
            rep_characteristic(calibrated_context(4), k)


class TestPhi:
    """Test the map to pairs of lines."""

    def test_round_trip(self):
        rng = np.random.default_rng(6)
        rep = exterior_rep(3, 1)
        g = SamplingService.sample_group_element(3, rng, radius=1.0)
        el = act_element(rep, g, base_element(rep))
        rebuilt = phi_inv(phi(el), el.pairing())
        np.testing.assert_allclose(rebuilt.as_matrix(), el.as_matrix(), atol=1e-10)

    def test_non_transversal_pair(self):
        with pytest.raises(NotTransversalError):
            phi_inv((np.array([1.0, 0.0]), np.array([0.0, 1.0])))

    def test_zero_vector(self):
        with pytest.raises(ContractViolation):
            phi(RepElement(v=np.zeros(2), eps=np.array([1.0, 0.0])))


class TestPlucker:
    """Test Pluecker vectors and the flag covector."""

    def test_transversal_subspaces_pair_nonzero(self):
        rep = exterior_rep(2, 1)
        v = plucker_vector(rep, np.array([[1.0], [0.0]]))
        assert abs(flag_covector(rep, np.array([[0.0], [1.0]])) @ v) > 0.5

    def test_meeting_subspaces_pair_zero(self):
        rep = exterior_rep(2, 1)
        v = plucker_vector(rep, np.array([[1.0], [0.0]]))
        assert abs(flag_covector(rep, np.array([[1.0], [0.0]])) @ v) < 1e-15

    def test_frame_shape(self):
        with pytest.raises(ContractViolation):
            plucker_vector(exterior_rep(3, 2), np.eye(3))


class TestCotangentRealization:
    """Test rep_to_cotangent and graph membership."""

    @pytest.mark.parametrize("seed", [0, 1])
    def test_matches_adjoint_orbit(self, seed):
        ctx = build_context(3)
        ch = rep_characteristic(ctx, 1)
        g = SamplingService.sample_group_element(3, np.random.default_rng(seed), radius=1.0)
        xi = rep_to_cotangent(ctx, ch, g)
        expected = g @ ch.H0 @ np.linalg.inv(g)
        np.testing.assert_allclose(iota_inverse(xi), expected, atol=1e-9)

    def test_rejects_non_sl(self):
        ctx = build_context(2)
        with pytest.raises(NotInSLError):
            rep_to_cotangent(ctx, rep_characteristic(ctx, 1), 2 * np.eye(2))

    def test_graph_membership(self):
        rep = exterior_rep(2, 1)
        base = base_element(rep)
        assert graph_rep_membership(rep, base)
        assert not graph_rep_membership(rep, act_element(rep, scipy.linalg.expm(E12), base))

    @pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (3, 2), (4, 2), (4, 3)])
    def test_lowered_base_leaves_the_graph(self, n, k):
        rep = exterior_rep(n, k)
        lowered = lowered_base_element(rep)
        assert not np.allclose(lowered.v, base_element(rep).v)
        np.testing.assert_allclose(lowered.eps, base_element(rep).eps, atol=1e-12)
        assert not graph_rep_membership(rep, lowered)
