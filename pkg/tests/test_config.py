"""
Unit Tests for Configuration

Tests SuiteConfig validation, the settings helpers and the check definitions.
"""

import pytest
from pydantic import ValidationError

from config import (
    CHECK_DEFINITIONS,
    SUITE_NAMES,
    SuiteConfig,
    get_check_by_name,
    validate_dimension,
    validate_rep_degree,
    validate_theta,
)


class TestSuiteConfig:
    """Test the run configuration model."""

    def test_defaults(self):
        cfg = SuiteConfig()
        assert cfg.n == 2
        assert cfg.theta == []
        assert cfg.suites == list(SUITE_NAMES)

    def test_theta_is_sorted_and_unique(self):
        cfg = SuiteConfig(n=5, theta=[3, 1, 3])
        assert cfg.theta == [1, 3]

    def test_all_expands(self):
        assert SuiteConfig(suites=["all"]).suites == list(SUITE_NAMES)

    def test_suites_keep_canonical_order(self):
        assert SuiteConfig(suites=["lagrangian", "liealg"]).suites == ["liealg", "lagrangian"]

    @pytest.mark.parametrize("kwargs", [
        {"n": 1},
        {"n": 9},
        {"n": 3, "theta": [3]},
        {"n": 2, "theta": [1]},
        {"n": 3, "k": 3},
        {"samples": 0},
        {"seed": -1},
        {"tol_exact": 0.0},
        {"suites": ["nope"]},
    ])
    def test_rejects_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            SuiteConfig(**kwargs)

    def test_is_frozen(self):
        cfg = SuiteConfig()
        with pytest.raises(ValidationError):
            cfg.n = 3


class TestValidators:
    """Test settings validation helpers."""

    def test_dimension(self):
        assert validate_dimension(4) == (True, None)
        ok, error = validate_dimension(1)
        assert not ok and "outside" in error
        assert not validate_dimension(True)[0]

    def test_rep_degree(self):
        assert validate_rep_degree(4, 2)[0]
        assert not validate_rep_degree(4, 4)[0]

    def test_theta(self):
        assert validate_theta(4, [1, 3])[0]
        assert not validate_theta(4, [0])[0]


class TestCheckDefinitions:
    """Test the check definition table."""

    def test_one_table_per_suite(self):
        assert tuple(CHECK_DEFINITIONS) == SUITE_NAMES

    def test_names_are_prefixed_and_unique(self):
        names = [c["name"] for suite, checks in CHECK_DEFINITIONS.items() for c in checks]
        assert len(names) == len(set(names))
        for suite, checks in CHECK_DEFINITIONS.items():
            assert all(c["name"].startswith(f"{suite}.") for c in checks)

    def test_negative_controls_have_thresholds(self):
        for checks in CHECK_DEFINITIONS.values():
            for c in checks:
                assert c["kind"] in {"exact", "fd", "count", "negative"}
                if c["kind"] == "negative":
                    assert c["threshold"] > 0

    def test_lookup(self):
        assert get_check_by_name("lagrangian.graph_plain")["kind"] == "exact"
        assert get_check_by_name("lagrangian.missing") is None

    @pytest.mark.parametrize("name,anchor", [
        ("cotangent.mu_iota_inverse", "μ and ι are inverse to each other"),
        ("cotangent.cocycle_vanishing", "c is identically zero"),
        ("cotangent.symplectic_pullback", "μ∗ω = Ω"),
        ("product.orbit_pair_transversal", "transversal if g = p1 + p2"),
        ("rep.graph_membership", "ker ε = v⊥"),
    ])
    def test_quoted_anchors_are_verbatim(self, name, anchor):
        assert get_check_by_name(name)["anchor"] == anchor

    def test_every_check_has_an_anchor(self):
        for checks in CHECK_DEFINITIONS.values():
            assert all(c["anchor"].strip() for c in checks)
