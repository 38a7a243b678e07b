"""
Unit Tests for Command Service

Tests the handlers behind the inspection verbs of the CLI.
"""

import numpy as np
import pytest

from clients.matrix_io import decode_matrix
from core.errors import NotInSLError, NotOnOrbitError
from services.command_service import CommandService
from tests import SL2_H0


UPPER = np.array([[1, 1], [0, -1]], dtype=complex)


class TestOrbitVerbs:
    """Test orbit and cotangent handlers."""

    def test_factorize(self):
        out = CommandService.orbit_factorize(2, [], UPPER)
        X = decode_matrix(out["X"])
        assert abs(abs(X[0, 1]) - 1.0) < 1e-12
        np.testing.assert_allclose(decode_matrix(out["Y"]), UPPER)

    def test_factorize_rejects_other_orbits(self):
        with pytest.raises(NotOnOrbitError):
            CommandService.orbit_factorize(2, [], 2 * SL2_H0)

    def test_project(self):
        out = CommandService.orbit_project(2, [], UPPER)
        np.testing.assert_allclose(decode_matrix(out["pi"]), SL2_H0, atol=1e-12)

    def test_mu_returns_the_orbit_point(self):
        out = CommandService.cotangent_mu(2, [], UPPER)
        np.testing.assert_allclose(decode_matrix(out["mu"]), UPPER, atol=1e-9)

    def test_flow_keys(self):
        Z = np.array([[0, 0.1], [0, 0]], dtype=complex)
        out = CommandService.cotangent_flow(2, [], SL2_H0, Z, 0.5, steps=10)
        assert set(out) == {"base", "W", "Y"}


class TestProductAndRepVerbs:
    """Test flag product and representation handlers."""

    def test_embed_identity(self):
        out = CommandService.product_embed(2, [], np.eye(2))
        assert out["transversal"] is True
        assert len(out["first"]) == 1

    def test_embed_requires_sl(self):
        with pytest.raises(NotInSLError):
            CommandService.product_embed(2, [], 2 * np.eye(2))

    def test_transversal(self):
        assert CommandService.product_transversal(2, [], UPPER)["transversal"] is True

    def test_rep_moment_at_identity(self):
        out = CommandService.rep_moment(2, 1, np.eye(2))
        np.testing.assert_allclose(decode_matrix(out["moment"]), np.diag([0.125, -0.125]), atol=1e-12)

    def test_rep_height(self):
        out = CommandService.rep_height(2, 1, np.eye(2), SL2_H0)
        assert out["height"] == pytest.approx([1.0, 0.0])

    def test_rep_phi(self):
        out = CommandService.rep_phi(3, 1, np.eye(3))
        np.testing.assert_allclose(decode_matrix(out["v"], vector=True), [1, 0, 0])


class TestLagrangianVerbs:
    """Test Lagrangean graph handlers."""

    def test_plain_residual(self):
        out = CommandService.lagrangian_residual(3, [], "plain", samples=2, seed=0)
        assert out["kind"] == "plain"
        assert out["residual"] < 1e-8

    def test_identity_control(self):
        assert CommandService.lagrangian_residual(2, [], "identity", samples=2, seed=0)["residual"] > 0.1

    def test_antiholo(self):
        out = CommandService.lagrangian_antiholo(2, [], samples=2, seed=1)
        assert out["antiholomorphy"] < 1e-8
        assert out["holomorphy"] > 0.1

    def test_fixed_points(self):
        out = CommandService.lagrangian_fixed_points(count=36)
        assert set(out) == {"r", "m_R_w", "R_w0"}
        assert out["r"]["known_defect"] < 1e-12
        assert out["r"]["spurious"] == 0
        assert out["m_R_w"]["known_defect"] < 1e-12
        assert out["R_w0"]["grid_fixed"] == 0
        assert out["R_w0"]["known"] == []
