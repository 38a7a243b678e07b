"""
Unit Tests for the Adjoint Orbit Kernel

Tests characteristic elements, the parabolic splitting, the ordered Schur
factorization, the fibration onto the flag and the KKS form.
"""

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings, strategies as st

from core.cotangent import calibrate_kks_sign, calibrated_context
from core.errors import ContractViolation, DefectiveInputError, NotOnOrbitError
from core.orbit import (
    Characteristic,
    factorize,
    kks_form,
    parabolic_split,
    project_pi,
    recompose,
)
from core.weylgrp import ThetaSet
from services.sampling_service import SamplingService
from tests import DESK_CONFIGS, SEEDS, SL2_H0, SL2_LOWER


@pytest.fixture
def sl2():
    return Characteristic.from_diagonal([1.0, -1.0])


def _unit(n, i, j):
    E = np.zeros((n, n), dtype=complex)
    E[i, j] = 1.0
    return E


class TestCharacteristic:
    """Test characteristic elements and their derived data."""

    def test_sl2_from_theta(self):
        ch = Characteristic.from_theta(2, ThetaSet())
        np.testing.assert_allclose(ch.H0, SL2_H0)
        assert ch.is_regular
        assert ch.dim_nplus == 1

    def test_partial_flag_blocks(self):
        ch = Characteristic.from_theta(3, ThetaSet.of([1]))
        assert ch.theta == ThetaSet.of([1])
        assert ch.block_sizes == (2, 1)
        assert ch.dim_nplus == 2
        assert not ch.upper_mask[0, 1]
        assert ch.upper_mask[0, 2] and ch.upper_mask[1, 2]

    def test_dual_negates_and_sorts(self):
        ch = Characteristic.from_diagonal([1.0, 1.0, -2.0])
        assert ch.dual().diagonal == (2.0, -1.0, -1.0)
        assert ch.dual().dual() == ch

    @pytest.mark.parametrize("diagonal", [[1.0, 1.0], [-1.0, 1.0], [0.0, 0.0], [1.0]])
    def test_rejects_invalid_diagonal(self, diagonal):
        with pytest.raises(ContractViolation):
            Characteristic.from_diagonal(diagonal)

    def test_roundoff_in_equal_entries(self):
        """Entries equal up to roundoff form one block and count as decreasing."""
        ch = Characteristic.from_diagonal([0.09375, -0.03125, -0.031249999999999993, -0.03125000000000001])
        assert ch.theta == ThetaSet.of([2, 3])
        assert ch.block_sizes == (1, 3)


class TestParabolicSplit:
    """Test the splitting n- + z + n+."""

    def test_positive_root_vector(self, sl2):
        minus, zero, plus = parabolic_split(sl2, _unit(2, 0, 1))
        assert np.allclose(minus, 0) and np.allclose(zero, 0)
        np.testing.assert_allclose(plus, _unit(2, 0, 1))

    def test_cartan_element(self, sl2):
        minus, zero, plus = parabolic_split(sl2, SL2_H0)
        np.testing.assert_allclose(zero, SL2_H0)
        assert np.allclose(minus, 0) and np.allclose(plus, 0)

    def test_root_inside_a_block(self):
        """alpha_12(H0) = 0 puts E12 in the centralizer."""
        ch = Characteristic.from_diagonal([1.0, 1.0, -2.0])
        _, zero, plus = parabolic_split(ch, _unit(3, 0, 1))
        np.testing.assert_allclose(zero, _unit(3, 0, 1))
        assert np.allclose(plus, 0)

    def test_shape_mismatch(self, sl2):
        with pytest.raises(ContractViolation):
            parabolic_split(sl2, np.zeros((3, 3)))


class TestFactorize:
    """Test Y = k (H0 + X) k*."""

    def test_base_point(self, sl2):
        p = factorize(sl2, SL2_H0)
        np.testing.assert_allclose(recompose(sl2, p), SL2_H0, atol=1e-12)
        assert np.allclose(p.X, 0)

    def test_already_upper(self, sl2):
        Y = SL2_H0 + _unit(2, 0, 1)
        p = factorize(sl2, Y)
        np.testing.assert_allclose(recompose(sl2, p), Y, atol=1e-12)
        assert abs(abs(p.X[0, 1]) - 1.0) < 1e-12

    def test_hermitian_point_has_no_fibre_part(self, sl2):
        Y = np.array([[0, 1], [1, 0]], dtype=complex)
        p = factorize(sl2, Y)
        np.testing.assert_allclose(recompose(sl2, p), Y, atol=1e-12)
        assert np.allclose(p.X, 0, atol=1e-12)

    def test_lower_triangular_example(self, sl2):
        p = factorize(sl2, SL2_LOWER)
        np.testing.assert_allclose(recompose(sl2, p), SL2_LOWER, atol=1e-12)

    def test_spectrum_mismatch(self, sl2):
        with pytest.raises(NotOnOrbitError):
            factorize(sl2, np.diag([2.0, -2.0]))

    def test_defective_input(self):
        """A Jordan block inside a repeated eigenvalue is not on a semisimple orbit."""
        ch = Characteristic.from_diagonal([1.0, 1.0, -2.0])
        Y = np.diag([1.0, 1.0, -2.0]).astype(complex)
        Y[0, 1] = 1.0
        with pytest.raises(DefectiveInputError):
            factorize(ch, Y)

    @pytest.mark.parametrize("n,theta", DESK_CONFIGS)
    @settings(max_examples=10, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_recomposition(self, n, theta, seed):
        ch = Characteristic.from_theta(n, ThetaSet.of(theta))
        p = SamplingService.sample_orbit_point(ch, np.random.default_rng(seed))
        scale = max(1.0, np.linalg.norm(p.Y))
        np.testing.assert_allclose(recompose(ch, p), p.Y, atol=1e-9 * scale)
        np.testing.assert_allclose(p.k.conj().T @ p.k, np.eye(n), atol=1e-10)
        assert np.allclose(p.X * ~ch.upper_mask, 0)


class TestProjectPi:
    """Test the fibration onto the flag."""

    def test_fibre_projects_to_base(self, sl2):
        np.testing.assert_allclose(project_pi(sl2, SL2_H0 + _unit(2, 0, 1)), SL2_H0, atol=1e-12)

    def test_hermitian_point_is_fixed(self, sl2):
        Y = np.array([[0, 1], [1, 0]], dtype=complex)
        np.testing.assert_allclose(project_pi(sl2, Y), Y, atol=1e-12)

    @pytest.mark.parametrize("seed", SEEDS)
    def test_equivariance(self, seed):
        ch = Characteristic.from_theta(3, ThetaSet.of([1]))
        rng = np.random.default_rng(seed)
        p = SamplingService.sample_orbit_point(ch, rng)
        u = SamplingService.sample_unitary(3, rng)
        lhs = project_pi(ch, u @ p.Y @ u.conj().T)
        rhs = u @ project_pi(ch, p) @ u.conj().T
        np.testing.assert_allclose(lhs, rhs, atol=1e-8)


class TestKKSForm:
    """Test the KKS form."""

    def test_sl2_value(self, sl2):
        ctx = calibrated_context(2)
        value = kks_form(ctx, sl2, SL2_H0, _unit(2, 1, 0), _unit(2, 0, 1))
        assert value == pytest.approx(-8.0 * calibrate_kks_sign())

    def test_antisymmetric(self, sl2):
        ctx = calibrated_context(2)
        Z = _unit(2, 0, 1) + 0.5 * _unit(2, 1, 0)
        assert kks_form(ctx, sl2, SL2_H0, Z, Z) == pytest.approx(0.0)

    def test_vanishes_on_stabilizer(self, sl2):
        ctx = calibrated_context(2)
        assert kks_form(ctx, sl2, SL2_H0, SL2_H0, _unit(2, 0, 1)) == pytest.approx(0.0)

    @pytest.mark.parametrize("n,theta", [(2, []), (3, [1]), (4, [2])])
    def test_nondegenerate_at_base(self, n, theta):
        """Over E_ij, i E_ij in n- + n+ the Gram matrix has full rank."""
        ctx = calibrated_context(n)
        ch = Characteristic.from_theta(n, ThetaSet.of(theta))
        basis = []
        for i, j in zip(*np.nonzero(ch.upper_mask | ch.lower_mask)):
            basis.extend([_unit(n, i, j), 1j * _unit(n, i, j)])
        gram = np.array([[kks_form(ctx, ch, ch.H0, a, b) for b in basis] for a in basis])
        assert len(basis) == 4 * ch.dim_nplus
        assert np.linalg.matrix_rank(gram) == len(basis)


class TestFibres:
    """Test that fibres of the fibration are affine."""

    @pytest.mark.parametrize("seed", SEEDS)
    def test_unipotent_shift_stays_in_nplus(self, seed):
        ctx = calibrated_context(3)
        ch = Characteristic.from_theta(3, ThetaSet.of([1]))
        N = SamplingService.sample_algebra(ctx, np.random.default_rng(seed)) * ch.upper_mask
        g = scipy.linalg.expm(N)
        shifted = g @ ch.H0 @ np.linalg.inv(g) - ch.H0
        np.testing.assert_allclose(shifted * ~ch.upper_mask, 0.0, atol=1e-9 * max(1.0, np.linalg.norm(shifted)))
