"""
Verification Checks Module

This module contains every named check the harness can run. Each check
takes a CheckEnv, evaluates one mathematical statement on sampled data and
returns a structured report entry (name, anchor, max_residual, tol, pass,
error).

Checks are grouped into suites, one per area:
- liealg: Killing form, dual bases, Iwasawa and Cartan decompositions
- weyl: representatives, principal involution, right action
- orbit: factorization, fibration, KKS form
- cotangent: T*F, moment map, Hamiltonian flows, brackets
- product: the open orbit in F x F*, SL(2) dictionary
- rep: exterior powers, representation moment map, Pluecker data
- lagrangian: Borel metric, R_w0, Lagrangean graphs

Suites are registered in the check registry for the suite service.
"""

from .check_base import CheckEnv, structured_check

from .liealg_checks import LIEALG_SUITE
from .weyl_checks import WEYL_SUITE
from .orbit_checks import ORBIT_SUITE
from .cotangent_checks import COTANGENT_SUITE
from .product_checks import PRODUCT_SUITE
from .rep_checks import REP_SUITE
from .lagrangian_checks import LAGRANGIAN_SUITE


# Check registry for the suite service
def get_check_registry():
    """
    Get the complete registry of check suites.

    Returns:
        Dictionary mapping suite names to ordered lists of check functions
    """
    return {
        "liealg": LIEALG_SUITE,
        "weyl": WEYL_SUITE,
        "orbit": ORBIT_SUITE,
        "cotangent": COTANGENT_SUITE,
        "product": PRODUCT_SUITE,
        "rep": REP_SUITE,
        "lagrangian": LAGRANGIAN_SUITE,
    }


__all__ = [
    # Infrastructure
    "CheckEnv",
    "structured_check",

    # Suites
    "LIEALG_SUITE",
    "WEYL_SUITE",
    "ORBIT_SUITE",
    "COTANGENT_SUITE",
    "PRODUCT_SUITE",
    "REP_SUITE",
    "LAGRANGIAN_SUITE",

    # Registry
    "get_check_registry",
]
