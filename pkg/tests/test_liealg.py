"""
Unit Tests for the Lie Algebra Kernel

Tests the Killing form, Gram solves, fundamental duals, Iwasawa and Cartan
decompositions of sl(n, C).
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from core.errors import ContractViolation, NotInSLError
from core.liealg import (
    build_context,
    cartan_split,
    compact_basis,
    coroot_duality_matrix,
    iwasawa,
    killing,
    killing_via_ad,
    real_values,
    solve_real_dual,
    weyl_basis_vectors,
)
from services.sampling_service import SamplingService
from tests import SL2_H0


@pytest.fixture
def ctx3():
    return build_context(3)


class TestBuildContext:
    """Test structure data of sl(n, C)."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_dimensions(self, n):
        """Basis has n^2 - 1 elements and the realification twice that."""
        ctx = build_context(n)
        assert ctx.dim == n * n - 1
        assert len(ctx.basis) == ctx.dim
        assert len(ctx.real_basis) == 2 * ctx.dim
        assert len(ctx.roots) == n * (n - 1)
        assert len(ctx.cartan_basis) == n - 1

    def test_basis_is_traceless(self, ctx3):
        for b in ctx3.basis:
            assert abs(np.trace(b)) < 1e-15

    def test_rejects_n_below_two(self):
        with pytest.raises(ContractViolation):
            build_context(1)

    def test_sl2_fundamental_dual(self):
        """H_mu_1 = diag(1/8, -1/8) for n = 2."""
        ctx = build_context(2)
        np.testing.assert_allclose(ctx.fundamental_H[0], np.diag([0.125, -0.125]), atol=1e-12)

    def test_with_sign_keeps_structure(self):
        ctx = build_context(2)
        flipped = ctx.with_sign(-1)
        assert flipped.kks_sign == -1
        assert flipped.n == ctx.n
        assert flipped.basis is ctx.basis


class TestKilling:
    """Test the Killing form."""

    def test_sl2_value(self):
        ctx = build_context(2)
        assert killing(ctx, SL2_H0, SL2_H0) == pytest.approx(8.0)

    def test_off_diagonal_pairing(self):
        """B(E12, E21) = 2n for n = 2."""
        ctx = build_context(2)
        E12 = np.array([[0, 1], [0, 0]], dtype=complex)
        E21 = E12.T.copy()
        assert killing(ctx, E12, E21) == pytest.approx(4.0)
        assert killing(ctx, E12, E12) == pytest.approx(0.0)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_root_spaces_are_orthogonal(self, n):
        """B(E_ij, E_kl) vanishes unless (k, l) = (j, i)."""
        ctx = build_context(n)
        for i, j in ctx.roots:
            for k, l in ctx.roots:
                E = np.zeros((n, n), dtype=complex)
                F = np.zeros((n, n), dtype=complex)
                E[i, j] = 1.0
                F[k, l] = 1.0
                expected = 2.0 * n if (k, l) == (j, i) else 0.0
                assert killing(ctx, E, F) == pytest.approx(expected, abs=1e-12)

    def test_shape_mismatch(self, ctx3):
        with pytest.raises(ContractViolation):
            killing(ctx3, np.eye(2), np.eye(3))

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1), n=st.sampled_from([2, 3]))
    def test_matches_trace_of_adjoints(self, seed, n):
        """2n tr(XY) agrees with tr(ad X ad Y)."""
        ctx = build_context(n)
        rng = np.random.default_rng(seed)
        X = SamplingService.sample_algebra(ctx, rng)
        Y = SamplingService.sample_algebra(ctx, rng)
        fast = killing(ctx, X, Y)
        slow = killing_via_ad(ctx, X, Y)
        assert abs(fast - slow) <= 1e-9 * max(1.0, abs(slow))


class TestGramSolves:
    """Test real duals with respect to Re B."""

    @settings(max_examples=10, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_round_trip(self, seed):
        ctx = build_context(3)
        M = SamplingService.sample_algebra(ctx, np.random.default_rng(seed))
        rebuilt = solve_real_dual(ctx, real_values(ctx, M))
        np.testing.assert_allclose(rebuilt, M, atol=1e-10 * max(1.0, np.linalg.norm(M)))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_coroot_duality_is_identity(self, n):
        D = coroot_duality_matrix(build_context(n))
        np.testing.assert_allclose(D, np.eye(n - 1), atol=1e-10)


class TestDecompositions:
    """Test Iwasawa and Cartan decompositions."""

    @pytest.mark.parametrize("seed", [0, 1, 2, 3])
    def test_iwasawa_factors(self, seed):
        rng = np.random.default_rng(seed)
        g = SamplingService.sample_group_element(3, rng)
        f = iwasawa(g)

        np.testing.assert_allclose(f.product(), g, atol=1e-10 * np.linalg.norm(g))
        np.testing.assert_allclose(f.k.conj().T @ f.k, np.eye(3), atol=1e-10)
        assert abs(np.linalg.det(f.k) - 1.0) < 1e-10
        a = np.diag(f.a)
        assert np.all(a.real > 0) and np.allclose(a.imag, 0)
        assert np.allclose(np.tril(f.n_part, -1), 0)
        assert np.allclose(np.diag(f.n_part), 1)

    def test_iwasawa_rejects_non_sl(self):
        with pytest.raises(NotInSLError):
            iwasawa(2 * np.eye(2))

    def test_cartan_split(self, ctx3):
        Z = SamplingService.sample_algebra(ctx3, np.random.default_rng(5))
        A, X = cartan_split(Z)
        np.testing.assert_allclose(A + X, Z)
        np.testing.assert_allclose(A, -A.conj().T)
        np.testing.assert_allclose(X, X.conj().T)

    def test_cartan_split_needs_square(self):
        with pytest.raises(ContractViolation):
            cartan_split(np.zeros((2, 3)))


class TestCompactBasis:
    """Test the basis of su(n)."""

    def test_weyl_basis_vectors(self, ctx3):
        A, Z = weyl_basis_vectors(ctx3, (0, 2))
        assert A[0, 2] == 1 and A[2, 0] == -1
        assert Z[0, 2] == 1j and Z[2, 0] == 1j

    def test_weyl_basis_rejects_negative_root(self, ctx3):
        with pytest.raises(ContractViolation):
            weyl_basis_vectors(ctx3, (2, 0))

    def test_compact_basis_is_anti_hermitian(self, ctx3):
        basis = compact_basis(ctx3)
        assert len(basis) == ctx3.dim
        for A in basis:
            np.testing.assert_allclose(A, -A.conj().T, atol=1e-15)
