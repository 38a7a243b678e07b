"""
Command Service - CLI Verb Handlers

One handler per `atlas` verb outside `verify`. Handlers take plain
arguments (matrices already decoded), call the kernels and return
JSON-ready dictionaries. Kernel errors (AtlasError) propagate to the CLI,
which reports them and exits with status 1.
"""

import logging
from typing import Any, Dict, List, Optional

import numpy as np

from clients.matrix_io import encode_matrix
from config.settings import DET_TOL
from core.cotangent import calibrated_context, flow, iota, iota_inverse, mu
from core.errors import NotInSLError
from core.flagprod import (
    cp1_grid,
    embed,
    fixed_line_defect,
    fixed_line_scan,
    orbit_to_pair,
    product_complex_structure_residual,
    sl2_antipodal,
    sl2_rotation,
    sl2_torus_reflection,
    transversal,
)
from core.lagrangian import (
    GraphSpec,
    antiholomorphy_residual,
    isometry_residual,
    lagrangian_residual,
)
from core.orbit import Characteristic, factorize, project_pi
from core.repmodel import (
    act_element,
    base_element,
    exterior_rep,
    height_rep,
    moment_rep,
    phi,
)
from core.weylgrp import ThetaSet
from services.sampling_service import SamplingService

logger = logging.getLogger(__name__)


def _characteristic(n: int, theta: List[int]) -> Characteristic:
    return Characteristic.from_theta(n, ThetaSet.of(theta))


def _require_sl(g: np.ndarray) -> np.ndarray:
    g = np.asarray(g, dtype=complex)
    det = np.linalg.det(g)
    if not np.isfinite(det) or abs(det - 1.0) > DET_TOL:
        raise NotInSLError(f"det = {det:.3e}")
    return g


def _encode_flag(flag) -> list:
    return [encode_matrix(V) for V in flag.subspaces]


# ============================================================================
# COMMAND SERVICE
# ============================================================================

class CommandService:
    """
    Handlers for the inspection verbs of the CLI.

    All methods are static and side-effect free apart from logging.
    """

    # ---------------------------------------------------------------- orbit

    @staticmethod
    def orbit_factorize(n: int, theta: List[int], Y: np.ndarray) -> Dict[str, Any]:
        """
        Factorize an orbit point.

        Returns:
            {"k": ..., "X": ..., "Y": ...} with Y = k (H0 + X) k*
        """
        p = factorize(_characteristic(n, theta), Y)
        return {"k": encode_matrix(p.k), "X": encode_matrix(p.X), "Y": encode_matrix(p.Y)}

    @staticmethod
    def orbit_project(n: int, theta: List[int], Y: np.ndarray) -> Dict[str, Any]:
        return {"pi": encode_matrix(project_pi(_characteristic(n, theta), Y))}

    # ------------------------------------------------------------ cotangent

    @staticmethod
    def cotangent_iota(n: int, theta: List[int], Y: np.ndarray) -> Dict[str, Any]:
        xi = iota(_characteristic(n, theta), Y)
        return {"base": encode_matrix(xi.base), "W": encode_matrix(xi.W), "k": encode_matrix(xi.k)}

    @staticmethod
    def cotangent_mu(n: int, theta: List[int], Y: np.ndarray) -> Dict[str, Any]:
        """mu of the covector iota(Y); equals Y on the orbit."""
        ch = _characteristic(n, theta)
        value = mu(calibrated_context(n), ch, iota(ch, Y))
        return {"mu": encode_matrix(value)}

    @staticmethod
    def cotangent_flow(
        n: int,
        theta: List[int],
        Y: np.ndarray,
        Z: np.ndarray,
        t: float,
        steps: Optional[int] = None,
    ) -> Dict[str, Any]:
        """
        Flow of theta(Z) from iota(Y) for time t.

        Returns:
            The final covector and its orbit point
        """
        ch = _characteristic(n, theta)
        end = flow(calibrated_context(n), ch, Z, iota(ch, Y), t, steps=steps)
        logger.debug(f"Flow of length {t} finished")
        return {
            "base": encode_matrix(end.base),
            "W": encode_matrix(end.W),
            "Y": encode_matrix(iota_inverse(end)),
        }

    # -------------------------------------------------------------- product

    @staticmethod
    def product_embed(n: int, theta: List[int], g: np.ndarray) -> Dict[str, Any]:
        pair = embed(_characteristic(n, theta), _require_sl(g))
        return {
            "first": _encode_flag(pair.first),
            "second": _encode_flag(pair.second),
            "transversal": transversal(pair),
        }

    @staticmethod
    def product_transversal(n: int, theta: List[int], Y: np.ndarray) -> Dict[str, Any]:
        """Transversality of the flag pair of an orbit point."""
        return {"transversal": transversal(orbit_to_pair(_characteristic(n, theta), Y))}

    @staticmethod
    def product_residual(n: int, theta: List[int], Y: np.ndarray) -> Dict[str, Any]:
        ch = _characteristic(n, theta)
        return {"residual": product_complex_structure_residual(ch, Y)}

    # ------------------------------------------------------------------ rep

    @staticmethod
    def rep_moment(n: int, k: int, g: np.ndarray) -> Dict[str, Any]:
        """M(g.(v0 (x) eps0)) for the k-th exterior power."""
        rep = exterior_rep(n, k)
        el = act_element(rep, _require_sl(g), base_element(rep))
        return {"moment": encode_matrix(moment_rep(calibrated_context(n), rep, el))}

    @staticmethod
    def rep_height(n: int, k: int, g: np.ndarray, H: np.ndarray) -> Dict[str, Any]:
        rep = exterior_rep(n, k)
        el = act_element(rep, _require_sl(g), base_element(rep))
        value = complex(height_rep(rep, el, H))
        return {"height": [value.real, value.imag]}

    @staticmethod
    def rep_phi(n: int, k: int, g: np.ndarray) -> Dict[str, Any]:
        rep = exterior_rep(n, k)
        v, eps = phi(act_element(rep, _require_sl(g), base_element(rep)))
        return {"v": encode_matrix(v), "eps": encode_matrix(eps)}

    # ----------------------------------------------------------- lagrangian

    @staticmethod
    def lagrangian_residual(
        n: int,
        theta: List[int],
        kind: str,
        samples: int,
        seed: int,
    ) -> Dict[str, Any]:
        """
        Product-form value on the graph of a map of the given kind.

        Args:
            kind: "plain", "random", "torus" or "identity" (negative control)
        """
        ch = _characteristic(n, theta)
        if kind == "identity":
            spec = GraphSpec.identity_map(n)
        else:
            spec = SamplingService.sample_graph_spec(n, SamplingService.sample_rng(seed, 0), kind)
        return {"kind": kind, "residual": lagrangian_residual(ch, spec, samples, seed)}

    @staticmethod
    def lagrangian_antiholo(n: int, theta: List[int], samples: int, seed: int) -> Dict[str, Any]:
        ch = _characteristic(n, theta)
        return {
            "antiholomorphy": antiholomorphy_residual(ch, samples, seed),
            "holomorphy": antiholomorphy_residual(ch, samples, seed, flip=True),
        }

    @staticmethod
    def lagrangian_isometry(n: int, theta: List[int], samples: int, seed: int) -> Dict[str, Any]:
        return {"isometry": isometry_residual(_characteristic(n, theta), samples, seed)}

    @staticmethod
    def lagrangian_fixed_points(count: int = 100) -> Dict[str, Any]:
        """
        Fixed lines of the SL(2) maps r, m o R_w and R_{w0} on a grid of CP^1.

        Returns:
            Per map: grid lines with defect below 1e-6, plus certified known lines
        """
        grid = cp1_grid(count)
        maps = {
            "r": (sl2_rotation, [np.array([1.0, 1j]), np.array([1.0, -1j])]),
            "m_R_w": (sl2_torus_reflection, [np.array([1.0, 1.0]), np.array([1.0, -1.0])]),
            "R_w0": (sl2_antipodal, []),
        }
        out: Dict[str, Any] = {}
        for name, (line_map, known) in maps.items():
            fixed = [xi for xi in grid if fixed_line_defect(line_map, xi) < 1e-6]
            entry: Dict[str, Any] = {
                "grid_fixed": len(fixed),
                "known": [encode_matrix(xi) for xi in known],
                "known_defect": max((fixed_line_defect(line_map, xi) for xi in known), default=0.0),
            }
            if name == "r":
                _, entry["spurious"] = fixed_line_scan(line_map, known, count=count)
            out[name] = entry
        return out

