"""
Check Infrastructure

Shared pieces for the per-suite check functions:
- CheckEnv: the run configuration with its algebra context and characteristic
- structured_check: decorator that turns a residual function into a report entry
- Sample evaluation with optional thread parallelism and max-reduction
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property, wraps
from typing import Any, Callable, Dict

import numpy as np

from config import SuiteConfig, get_check_by_name
from core.cotangent import calibrated_context
from core.liealg import AlgebraCtx
from core.orbit import Characteristic
from core.repmodel import ExteriorRep, exterior_rep, rep_characteristic
from core.weylgrp import ThetaSet
from services.sampling_service import SamplingService

logger = logging.getLogger(__name__)


# ============================================================================
# DATA STRUCTURES
# ============================================================================

@dataclass(frozen=True)
class CheckEnv:
    """
    Everything a check needs to evaluate its residual.

    Attributes:
        cfg: Validated run configuration
    """
    cfg: SuiteConfig

    @cached_property
    def ctx(self) -> AlgebraCtx:
        return calibrated_context(self.cfg.n)

    @cached_property
    def ch(self) -> Characteristic:
        return Characteristic.from_theta(self.cfg.n, ThetaSet.of(self.cfg.theta))

    @cached_property
    def regular(self) -> Characteristic:
        """Regular characteristic of the same size (self-dual)."""
        return Characteristic.from_theta(self.cfg.n, ThetaSet())

    @cached_property
    def rep(self) -> ExteriorRep:
        return exterior_rep(self.cfg.n, self.cfg.k)

    @cached_property
    def ch_mu(self) -> Characteristic:
        """Characteristic H_mu of the k-th fundamental weight."""
        return rep_characteristic(self.ctx, self.cfg.k)

    def tolerance(self, kind: str, factor: float = 1.0) -> float:
        if kind == "exact":
            return self.cfg.tol_exact * factor
        if kind == "fd":
            return self.cfg.tol_fd * factor
        return 0.0

    def count(self, cap: int) -> int:
        """Number of samples for a check whose cost limits it to `cap`."""
        if self.cfg.samples > cap:
            logger.info(f"✂️  samples clipped from {self.cfg.samples} to {cap}")
        return max(1, min(self.cfg.samples, cap))

    def rng(self, index: int) -> np.random.Generator:
        return SamplingService.sample_rng(self.cfg.seed, index)

    def max_over_samples(self, fn: Callable[[np.random.Generator], float], cap: int) -> float:
        """
        max of fn(rng_i) over the sample generators.

        Each sample has its own generator, so the result does not depend on
        the evaluation schedule.
        """
        indices = range(self.count(cap))
        if self.cfg.workers > 1:
            with ThreadPoolExecutor(max_workers=self.cfg.workers) as pool:
                values = list(pool.map(lambda i: float(fn(self.rng(i))), indices))
        else:
            values = [float(fn(self.rng(i))) for i in indices]
        return max(values)

    def min_over_samples(self, fn: Callable[[np.random.Generator], float], cap: int) -> float:
        """Smallest observed value; negative controls must stay above their threshold everywhere."""
        return -self.max_over_samples(lambda rng: -fn(rng), cap)

    def sum_over_samples(self, fn: Callable[[np.random.Generator], float], cap: int) -> float:
        """Total of fn(rng_i); used for disagreement counts."""
        return float(sum(fn(self.rng(i)) for i in range(self.count(cap))))


# ============================================================================
# ERROR HANDLING DECORATOR
# ============================================================================

def structured_check(name: str):
    """
    Decorator that evaluates a check and returns a report entry.

    The wrapped function receives a CheckEnv and returns the observed value.
    Negative controls are rewritten as max(0, threshold - observed) with tol 0.
    Exceptions never escape: they become a failing entry with an error message.
    """
    definition = get_check_by_name(name)
    if definition is None:
        raise KeyError(f"No check definition for {name}")

    def decorator(func: Callable[[CheckEnv], float]):
        @wraps(func)
        def wrapper(env: CheckEnv) -> Dict[str, Any]:
            kind = definition["kind"]
            tol = env.tolerance(kind, definition.get("factor", 1.0))
            entry: Dict[str, Any] = {
                "name": name,
                "anchor": definition["anchor"],
                "tol": tol,
                "max_residual": None,
                "pass": False,
                "error": None,
            }
            try:
                observed = float(func(env))
                if kind == "negative":
                    residual = max(0.0, definition["threshold"] - observed)
                else:
                    residual = observed
                if math.isnan(residual):
                    raise ValueError("residual is NaN")
                entry["max_residual"] = residual
                entry["pass"] = residual <= tol
                if entry["pass"]:
                    logger.debug(f"✅ {name}: {residual:.3e} <= {tol:.1e}")
                else:
                    logger.warning(f"❌ {name}: {residual:.3e} > {tol:.1e}")
            except Exception as e:
                logger.error(f"⚠️  {name} aborted: {e}", exc_info=True)
                entry["error"] = str(e)
            return entry

        wrapper.check_name = name
        return wrapper
    return decorator
