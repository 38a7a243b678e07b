"""
Unit Tests for the Check Infrastructure

Tests CheckEnv, the structured_check decorator and the check registry.
"""

import logging

import numpy as np
import pytest

from config import CHECK_DEFINITIONS, SUITE_NAMES, SuiteConfig
from tools import CheckEnv, get_check_registry, structured_check
from tools.cotangent_checks import (
    check_bracket_lift,
    check_cocycle_vanishing,
    check_symplectic_pullback,
    check_theta_homomorphism,
)
from tools.liealg_checks import LIEALG_SUITE, check_root_orthogonality
from tools.orbit_checks import check_fibre_affinity, check_kks_nondegenerate
from tools.rep_checks import check_graph_membership
from tools.weyl_checks import check_phase_independence


@pytest.fixture
def env():
    return CheckEnv(SuiteConfig(n=3, theta=[1], samples=4, seed=11))


class TestCheckEnv:
    """Test the shared check environment."""

    def test_characteristics(self, env):
        assert env.ch.theta.indices == frozenset({1})
        assert env.regular.is_regular
        assert env.ch_mu.n == 3

    def test_tolerances(self, env):
        assert env.tolerance("exact", 10.0) == pytest.approx(1e-7)
        assert env.tolerance("fd") == pytest.approx(env.cfg.tol_fd)
        assert env.tolerance("count") == 0.0
        assert env.tolerance("negative") == 0.0

    def test_count_respects_cap(self, env):
        assert env.count(2) == 2
        assert env.count(100) == 4

    def test_clipped_count_is_logged(self, env, caplog):
        with caplog.at_level(logging.INFO, logger="tools.check_base"):
            assert env.count(2) == 2
        assert "clipped from 4 to 2" in caplog.text

    @pytest.mark.parametrize("check,cap", [
        (check_cocycle_vanishing, 30),
        (check_symplectic_pullback, 30),
        (check_bracket_lift, 10),
        (check_theta_homomorphism, 10),
    ])
    def test_cotangent_sample_caps(self, check, cap, mocker):
        """The costly cotangent checks still draw the requested number of samples."""
        env = CheckEnv(SuiteConfig(n=2, samples=cap))
        spy = mocker.patch.object(CheckEnv, "max_over_samples", return_value=0.0)
        check(env)
        assert spy.call_args.kwargs["cap"] >= cap

    def test_worker_count_does_not_change_results(self):
        def draw(rng):
            return float(rng.standard_normal())

        serial = CheckEnv(SuiteConfig(samples=6, seed=3, workers=1))
        threaded = CheckEnv(SuiteConfig(samples=6, seed=3, workers=3))
        assert serial.max_over_samples(draw, cap=10) == threaded.max_over_samples(draw, cap=10)
        assert serial.min_over_samples(draw, cap=10) == threaded.min_over_samples(draw, cap=10)

    def test_sum_over_samples(self, env):
        assert env.sum_over_samples(lambda rng: 1.0, cap=10) == 4.0


class TestStructuredCheck:
    """Test the decorator that builds report entries."""

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            structured_check("liealg.not_a_check")

    def test_passing_entry(self, env):
        check = structured_check("liealg.killing_oracle")(lambda e: 0.0)
        entry = check(env)
        assert entry["pass"] is True
        assert entry["max_residual"] == 0.0
        assert entry["error"] is None
        assert entry["anchor"] == "via the Cartan-Killing form ⟨·,·⟩ of g"
        assert check.check_name == "liealg.killing_oracle"

    def test_failing_entry(self, env):
        entry = structured_check("liealg.killing_oracle")(lambda e: 1.0)(env)
        assert entry["pass"] is False
        assert entry["error"] is None

    def test_nan_becomes_error(self, env):
        entry = structured_check("liealg.killing_oracle")(lambda e: float("nan"))(env)
        assert entry["pass"] is False
        assert entry["max_residual"] is None
        assert "NaN" in entry["error"]

    def test_exception_becomes_error(self, env):
        def broken(e):
            raise RuntimeError("boom")

        entry = structured_check("liealg.killing_oracle")(broken)(env)
        assert entry["pass"] is False
        assert entry["error"] == "boom"

    @pytest.mark.parametrize("observed,passed,residual", [
        (1.0, True, 0.0),
        (0.05, False, 0.05),
    ])
    def test_negative_control(self, env, observed, passed, residual):
        entry = structured_check("lagrangian.isometry_control")(lambda e: observed)(env)
        assert entry["tol"] == 0.0
        assert entry["pass"] is passed
        assert entry["max_residual"] == pytest.approx(residual)


class TestRegistry:
    """Test the check registry against the definitions."""

    def test_suites(self):
        assert tuple(get_check_registry()) == SUITE_NAMES

    @pytest.mark.parametrize("suite", SUITE_NAMES)
    def test_every_definition_is_registered(self, suite):
        registered = {check.check_name for check in get_check_registry()[suite]}
        defined = {c["name"] for c in CHECK_DEFINITIONS[suite]}
        assert registered == defined

    def test_liealg_suite_passes(self):
        env = CheckEnv(SuiteConfig(n=2, samples=3))
        entries = [check(env) for check in LIEALG_SUITE]
        assert all(e["pass"] for e in entries), [e for e in entries if not e["pass"]]

    def test_tiny_tolerance_fails(self):
        env = CheckEnv(SuiteConfig(n=3, samples=3, tol_exact=1e-30))
        entries = [check(env) for check in LIEALG_SUITE]
        assert not all(e["pass"] for e in entries)
        assert all(e["error"] is None for e in entries)
        assert all(np.isfinite(e["max_residual"]) for e in entries)

    @pytest.mark.parametrize("n,k", [(3, 2), (4, 2)])
    def test_graph_membership_control_with_higher_degree(self, n, k):
        entry = check_graph_membership(CheckEnv(SuiteConfig(n=n, k=k, samples=4)))
        assert entry["pass"], entry
        assert entry["max_residual"] == 0.0

    @pytest.mark.parametrize("check", [
        check_root_orthogonality,
        check_phase_independence,
        check_fibre_affinity,
        check_kks_nondegenerate,
        check_theta_homomorphism,
    ])
    def test_invariant_checks_pass(self, check):
        entry = check(CheckEnv(SuiteConfig(n=3, theta=[1], samples=3)))
        assert entry["pass"], entry
