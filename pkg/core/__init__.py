"""
Numerical Kernels Module

This module contains the mathematics of the atlas:
- liealg: sl(n, C) structure data, Killing form, Iwasawa factorization
- weylgrp: Weyl group of type A, principal involution, right Weyl action
- orbit: characteristic elements, ordered Schur factorization, KKS form
- cotangent: T*F model, moment map, infinitesimal action, flows, canonical form
- repmodel: exterior-power representations and the representation moment map
- lagrangian: Borel metric, complex structure, R_{w0} and Lagrangean graphs
- flagprod: the open orbit in F x F* and the SL(2) dictionary

Kernels are pure functions over numpy arrays; shared caches are read-only
after construction.
"""

from .errors import (
    AtlasError,
    ContractViolation,
    DefectiveInputError,
    IntegrationDivergedError,
    InternalConsistencyError,
    NotInSLError,
    NotOnOrbitError,
    NotRegularError,
    NotTangentError,
    NotTransversalError,
)

from .liealg import (
    AlgebraCtx,
    IwasawaFactors,
    build_context,
    killing,
    killing_via_ad,
    iwasawa,
    cartan_split,
)

from .weylgrp import (
    ThetaSet,
    WeylElement,
    dual_theta,
    principal_involution,
    representative,
    right_action,
)

from .orbit import (
    Characteristic,
    OrbitPoint,
    factorize,
    kks_form,
    parabolic_split,
    project_pi,
)

from .cotangent import (
    CotangentPoint,
    TangentOfCotangent,
    calibrate_kks_sign,
    calibrated_context,
    canonical_two_form,
    cocycle,
    energy,
    flow,
    iota,
    iota_inverse,
    mu,
    theta_field,
)

from .repmodel import (
    ExteriorRep,
    RepElement,
    exterior_rep,
    height_rep,
    moment_rep,
    phi,
    phi_inv,
    rep_to_cotangent,
)

from .lagrangian import (
    GraphSpec,
    MetricSample,
    antiholomorphy_residual,
    borel_metric,
    complex_structure,
    graph_rep_membership,
    graph_tangent_basis,
    isometry_residual,
    kaehler_form,
    lagrangian_residual,
    r_w0_map,
)

from .flagprod import (
    FlagPair,
    NestedFlag,
    embed,
    hermitian_of_line_sl2,
    orbit_to_pair,
    pair_to_matrix_sl2,
    product_complex_structure_residual,
    transversal,
)

__all__ = [
    # Errors
    "AtlasError",
    "ContractViolation",
    "DefectiveInputError",
    "IntegrationDivergedError",
    "InternalConsistencyError",
    "NotInSLError",
    "NotOnOrbitError",
    "NotRegularError",
    "NotTangentError",
    "NotTransversalError",

    # Lie algebra
    "AlgebraCtx",
    "IwasawaFactors",
    "build_context",
    "killing",
    "killing_via_ad",
    "iwasawa",
    "cartan_split",

    # Weyl group
    "ThetaSet",
    "WeylElement",
    "dual_theta",
    "principal_involution",
    "representative",
    "right_action",

    # Orbits
    "Characteristic",
    "OrbitPoint",
    "factorize",
    "kks_form",
    "parabolic_split",
    "project_pi",

    # Cotangent model
    "CotangentPoint",
    "TangentOfCotangent",
    "calibrate_kks_sign",
    "calibrated_context",
    "canonical_two_form",
    "cocycle",
    "energy",
    "flow",
    "iota",
    "iota_inverse",
    "mu",
    "theta_field",

    # Representations
    "ExteriorRep",
    "RepElement",
    "exterior_rep",
    "height_rep",
    "moment_rep",
    "phi",
    "phi_inv",
    "rep_to_cotangent",

    # Lagrangeans
    "GraphSpec",
    "MetricSample",
    "antiholomorphy_residual",
    "borel_metric",
    "complex_structure",
    "graph_rep_membership",
    "graph_tangent_basis",
    "isometry_residual",
    "kaehler_form",
    "lagrangian_residual",
    "r_w0_map",

    # Flag products
    "FlagPair",
    "NestedFlag",
    "embed",
    "hermitian_of_line_sl2",
    "orbit_to_pair",
    "pair_to_matrix_sl2",
    "product_complex_structure_residual",
    "transversal",
]
