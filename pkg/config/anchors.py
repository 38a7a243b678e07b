"""
Check definitions for the verification suites.

This module contains:
- The statement each check certifies (its anchor), carried verbatim into reports
- The tolerance kind of each check (exact oracle, finite difference, count, negative control)

All check names and anchors should be maintained here (not hardcoded in tools/services).
"""

from typing import Dict, List, Optional

# Tolerance kinds:
#   exact    -> tol_exact * factor
#   fd       -> tol_fd * factor
#   count    -> tol 0, residual is a number of disagreements
#   negative -> tol 0, residual is max(0, threshold - observed)

# ============================================================================
# LIE ALGEBRA
# ============================================================================

LIEALG_CHECKS: List[Dict] = [
    {"name": "liealg.killing_oracle", "kind": "exact", "factor": 1.0,
     "anchor": "via the Cartan-Killing form ⟨·,·⟩ of g"},
    {"name": "liealg.gram_duality", "kind": "exact", "factor": 1.0,
     "anchor": "the real Killing Gram system recovers an element from its pairings"},
    {"name": "liealg.fundamental_duals", "kind": "exact", "factor": 1.0,
     "anchor": "The fundamental weights {μ1,...,μl}"},
    {"name": "liealg.coroot_duality", "kind": "exact", "factor": 1.0,
     "anchor": "⟨α∨i, μj⟩ = ... = δij"},
    {"name": "liealg.iwasawa", "kind": "exact", "factor": 1.0,
     "anchor": "global decomposition G = KAN"},
    {"name": "liealg.cartan_split", "kind": "exact", "factor": 1.0,
     "anchor": "The Cartan decomposition: g = k ⊕ s"},
    {"name": "liealg.root_orthogonality", "kind": "exact", "factor": 1.0,
     "anchor": "B(E_ij, E_kl) = 0 unless (k, l) = (j, i)"},
]

# ============================================================================
# WEYL GROUP
# ============================================================================

WEYL_CHECKS: List[Dict] = [
    {"name": "weyl.representatives", "kind": "exact", "factor": 1.0,
     "anchor": "the set of signed permutation matrices"},
    {"name": "weyl.principal_involution", "kind": "count", "factor": 0.0,
     "anchor": "we put Θ∗ = −w0Θ"},
    {"name": "weyl.right_action", "kind": "exact", "factor": 100.0,
     "anchor": "Rw : gHg−1 ↦ g(w̄Hw̄−1)g−1"},
    {"name": "weyl.right_action_equivariance", "kind": "exact", "factor": 100.0,
     "anchor": "(Rw)∗ Ã = Ã"},
    {"name": "weyl.phase_independence", "kind": "exact", "factor": 100.0,
     "anchor": "R_w does not depend on the phases of the diagonalizing eigenvectors"},
]

# ============================================================================
# ADJOINT ORBIT
# ============================================================================

ORBIT_CHECKS: List[Dict] = [
    {"name": "orbit.factorization", "kind": "exact", "factor": 10.0,
     "anchor": "Ad(G)HΘ = Ad(K)(HΘ + nΘ+)"},
    {"name": "orbit.projection_equivariance", "kind": "exact", "factor": 10.0,
     "anchor": "is equivariant with respect to the actions of K"},
    {"name": "orbit.parabolic_split", "kind": "exact", "factor": 1.0,
     "anchor": "where zΘ is the centralizer of HΘ"},
    {"name": "orbit.kks_invariance", "kind": "exact", "factor": 10.0,
     "anchor": "(real) Kirillov–Kostant–Souriaux form on the orbit"},
    {"name": "orbit.fibre_affinity", "kind": "exact", "factor": 0.1,
     "anchor": "the map g ∈ NΘ ↦ Ad(g)HΘ − HΘ ∈ nΘ is a diffeomorphism"},
    {"name": "orbit.kks_nondegenerate", "kind": "count", "factor": 0.0,
     "anchor": "the KKS form is nondegenerate on the tangent space at H0"},
]

# ============================================================================
# COTANGENT MODEL
# ============================================================================

COTANGENT_CHECKS: List[Dict] = [
    {"name": "cotangent.mu_iota_inverse", "kind": "exact", "factor": 1.0,
     "anchor": "μ and ι are inverse to each other"},
    {"name": "cotangent.mu_base_value", "kind": "exact", "factor": 0.01,
     "anchor": "μ(bΘ) = HΘ"},
    {"name": "cotangent.energy_pairing", "kind": "exact", "factor": 1.0,
     "anchor": "μ(ξ)(Y) = enY(ξ)"},
    {"name": "cotangent.vertical_closed_form", "kind": "exact", "factor": 1.0,
     "anchor": "is the constant parallel vector field whose restriction ... is −dfx"},
    {"name": "cotangent.theta_orbit_generator", "kind": "exact", "factor": 1.0,
     "anchor": "theta(Z) corresponds to the orbit generator [Z, Y] under iota"},
    {"name": "cotangent.theta_minus_compact", "kind": "exact", "factor": 1.0,
     "anchor": "θ(X) = X# if X ∈ k"},
    {"name": "cotangent.theta_minus_control", "kind": "negative", "threshold": 0.1,
     "anchor": "θ−(X) = X# − VX"},
    {"name": "cotangent.mu_equivariance", "kind": "exact", "factor": 10.0,
     "anchor": "mu is equivariant for the action on T*F"},
    {"name": "cotangent.flow_matches_action", "kind": "exact", "factor": 100.0,
     "anchor": "integrates to an action"},
    {"name": "cotangent.cocycle_vanishing", "kind": "exact", "factor": 100.0,
     "anchor": "c is identically zero"},
    {"name": "cotangent.symplectic_pullback", "kind": "fd", "factor": 1.0,
     "anchor": "μ∗ω = Ω"},
    {"name": "cotangent.hamiltonian_energy", "kind": "fd", "factor": 1.0,
     "anchor": "where enY : T∗FΘ → R is the energy function"},
    {"name": "cotangent.bracket_lift", "kind": "fd", "factor": 10.0,
     "anchor": "[A#, V_X] = V_[A, X]"},
    {"name": "cotangent.bracket_mixed", "kind": "fd", "factor": 10.0,
     "anchor": "[X#, V_Y] = [Y#, V_X]"},
    {"name": "cotangent.bracket_vertical", "kind": "fd", "factor": 10.0,
     "anchor": "[V_X, V_Y] = 0"},
    {"name": "cotangent.theta_homomorphism", "kind": "fd", "factor": 10.0,
     "anchor": "θ(X) = X# + VX is a homomorphism of Lie algebras"},
    {"name": "cotangent.transitivity", "kind": "count", "factor": 0.0,
     "anchor": "the action a is transitive"},
    {"name": "cotangent.isotropy", "kind": "exact", "factor": 1.0,
     "anchor": "the isotropy subalgebra ... coincides"},
    {"name": "cotangent.calibrated_sign", "kind": "count", "factor": 0.0,
     "anchor": "the KKS sign calibrated on sl(2) holds for every n"},
]

# ============================================================================
# FLAG PRODUCT
# ============================================================================

PRODUCT_CHECKS: List[Dict] = [
    {"name": "product.embed_transversal", "kind": "count", "factor": 0.0,
     "anchor": "The orbit G·(x0, w̃0y0) is open and dense"},
    {"name": "product.weyl_census", "kind": "count", "factor": 0.0,
     "anchor": "two in the diagonal ... and two in the open orbit"},
    {"name": "product.orbit_pair_equivariance", "kind": "exact", "factor": 100.0,
     "anchor": "O(H0) ≈ G·(H0, −H0)"},
    {"name": "product.orbit_pair_transversal", "kind": "count", "factor": 0.0,
     "anchor": "transversal if g = p1 + p2"},
    {"name": "product.complex_structure", "kind": "exact", "factor": 10.0,
     "anchor": "Then Jin = −J"},
    {"name": "product.complex_structure_control", "kind": "negative", "threshold": 1.0,
     "anchor": "J_in differs from +J on the open orbit"},
    {"name": "product.isotropy", "kind": "count", "factor": 0.0,
     "anchor": "Since ZH = PH ∩ P−H the identification follows"},
    {"name": "product.sl2_dictionary", "kind": "exact", "factor": 1.0,
     "anchor": "(ξ, η) ↦ ..."},
]

# ============================================================================
# REPRESENTATION MODEL
# ============================================================================

REP_CHECKS: List[Dict] = [
    {"name": "rep.homomorphism", "kind": "exact", "factor": 0.1,
     "anchor": "the representation of g on the k-th exterior power"},
    {"name": "rep.weight_vectors", "kind": "exact", "factor": 0.01,
     "anchor": "The highest weight space is generated by e1 ∧ · · · ∧ ek"},
    {"name": "rep.moment_base", "kind": "exact", "factor": 0.01,
     "anchor": "M(ε0 ⊗ v0) = Hμ"},
    {"name": "rep.moment_equivariance", "kind": "exact", "factor": 1.0,
     "anchor": "M is equivariant"},
    {"name": "rep.moment_orbit", "kind": "exact", "factor": 10.0,
     "anchor": "the image ... is the adjoint orbit of Hμ"},
    {"name": "rep.height_formula", "kind": "exact", "factor": 0.1,
     "anchor": "fH(v ⊗ ε) = ε(ρμ(H)v) = tr((v ⊗ ε)ρμ(H))"},
    {"name": "rep.phi_round_trip", "kind": "exact", "factor": 1.0,
     "anchor": "Φ(v ⊗ ε) = ([v],[ε])"},
    {"name": "rep.cotangent_realization", "kind": "exact", "factor": 10.0,
     "anchor": "where g = kp is the Iwasawa decomposition, Ad(p)Hμ = Hμ + X"},
    {"name": "rep.isotropy", "kind": "exact", "factor": 0.01,
     "anchor": "zHμ is contained in the isotropy subalgebra"},
    {"name": "rep.plucker", "kind": "exact", "factor": 10.0,
     "anchor": "linear transformations of rank 1 with transversal kernel and image"},
    {"name": "rep.graph_membership", "kind": "count", "factor": 0.0,
     "anchor": "ker ε = v⊥"},
]

# ============================================================================
# LAGRANGEAN GRAPHS
# ============================================================================

LAGRANGIAN_CHECKS: List[Dict] = [
    {"name": "lagrangian.borel_metric", "kind": "exact", "factor": 1.0,
     "anchor": "(Ãα(H0), Ãα(H0))B = ... = α(H0)"},
    {"name": "lagrangian.metric_invariance", "kind": "exact", "factor": 10.0,
     "anchor": "the Borel metric is K-invariant"},
    {"name": "lagrangian.complex_structure", "kind": "exact", "factor": 1.0,
     "anchor": "JAα = Zα, JZα = −Aα"},
    {"name": "lagrangian.weyl_point_rule", "kind": "exact", "factor": 1.0,
     "anchor": "which are not in general positive roots"},
    {"name": "lagrangian.kaehler_antisymmetry", "kind": "exact", "factor": 1.0,
     "anchor": "Ω(·,·) = (·, J(·))B the corresponding Kähler form, which is a symplectic form"},
    {"name": "lagrangian.kaehler_closed", "kind": "fd", "factor": 10.0,
     "anchor": "the Kaehler form of a Borel metric is closed"},
    {"name": "lagrangian.r_w0_equivariance", "kind": "exact", "factor": 10.0,
     "anchor": "Rw0 is equivariant by the left actions"},
    {"name": "lagrangian.antiholomorphy", "kind": "exact", "factor": 1.0,
     "anchor": "anti-holomorphic with respect to the canonical complex structures"},
    {"name": "lagrangian.antiholomorphy_control", "kind": "negative", "threshold": 1.0,
     "anchor": "R_w0 is not holomorphic"},
    {"name": "lagrangian.isometry", "kind": "exact", "factor": 1.0,
     "anchor": "is an isometry of Borel metrics"},
    {"name": "lagrangian.isometry_control", "kind": "negative", "threshold": 0.1,
     "anchor": "a rescaled metric is not preserved"},
    {"name": "lagrangian.graph_plain", "kind": "exact", "factor": 1.0,
     "anchor": "R∗w0 ΩH0∗ = −ΩH0"},
    {"name": "lagrangian.graph_random", "kind": "exact", "factor": 1.0,
     "anchor": "graph(k1 ◦ Rw0 ◦ k2)"},
    {"name": "lagrangian.graph_torus", "kind": "exact", "factor": 1.0,
     "anchor": "graph(m ◦ Rw0)"},
    {"name": "lagrangian.graph_identity_control", "kind": "negative", "threshold": 0.1,
     "anchor": "the diagonal of a self-dual flag is not Lagrangean"},
    {"name": "lagrangian.half_dimension", "kind": "count", "factor": 0.0,
     "anchor": "corresponds to a Lagrangean submanifold"},
    {"name": "lagrangian.pushforward", "kind": "fd", "factor": 0.1,
     "anchor": "induced by (A, Ad(k)A)"},
    {"name": "lagrangian.k_orbit", "kind": "exact", "factor": 1.0,
     "anchor": "coincides with the graph of Rw"},
    {"name": "lagrangian.sl2_fixed_lines", "kind": "count", "factor": 0.0,
     "anchor": "r fixes exactly (1, i) and (1, -i); m o R_w fixes (1, 1) and (1, -1)"},
    {"name": "lagrangian.sl2_graph_matrices", "kind": "exact", "factor": 0.0001,
     "anchor": "graph matrices match the explicit SL(2) displays"},
]

CHECK_DEFINITIONS: Dict[str, List[Dict]] = {
    "liealg": LIEALG_CHECKS,
    "weyl": WEYL_CHECKS,
    "orbit": ORBIT_CHECKS,
    "cotangent": COTANGENT_CHECKS,
    "product": PRODUCT_CHECKS,
    "rep": REP_CHECKS,
    "lagrangian": LAGRANGIAN_CHECKS,
}


def get_check_by_name(check_name: str) -> Optional[Dict]:
    """
    Get a check definition by name.

    Args:
        check_name: Dotted check name, e.g. "cotangent.cocycle_vanishing"

    Returns:
        Check definition dict or None if not found
    """
    suite = check_name.split(".", 1)[0]
    for check in CHECK_DEFINITIONS.get(suite, []):
        if check["name"] == check_name:
            return check
    return None
