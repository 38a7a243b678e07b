"""
Suite Service - Verification Coordinator

Orchestrates a verification run:
1. Receives a validated SuiteConfig
2. Fixes the KKS sign once by calibration
3. Runs every check of the selected suites through the check registry
4. Streams per-check entries to an optional sink
5. Returns a Report with per-suite wall times and the overall verdict

This is the main entry point for `atlas verify`.
"""

import logging
import time
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from config import SuiteConfig
from core.cotangent import calibrate_kks_sign

logger = logging.getLogger(__name__)


# ============================================================================
# DATA STRUCTURES
# ============================================================================

class CheckResult(BaseModel):
    """
    Outcome of one named check.

    Attributes:
        name: Check name, "<suite>.<check>"
        anchor: The statement the check certifies
        max_residual: Largest residual seen, None when the check aborted
        tol: Tolerance the residual is compared against
        passed: max_residual <= tol (serialized as "pass")
        error: Message of the structured failure, if any
    """

    model_config = ConfigDict(populate_by_name=True)

    name: str
    anchor: str
    max_residual: Optional[float] = None
    tol: float
    passed: bool = Field(alias="pass")
    error: Optional[str] = None


class SuiteReport(BaseModel):
    """
    Results of one suite.

    Attributes:
        suite: Suite name
        checks: Results in registry order
        wall_time: Seconds spent in the suite (the only timing field)
    """

    suite: str
    checks: List[CheckResult] = Field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


class Report(BaseModel):
    """
    Full verification report.

    Attributes:
        config: Echo of the run configuration
        calibrated_sign: KKS sign fixed by calibration, +1 or -1
        suites: One SuiteReport per selected suite
        passed: True when every check passed
    """

    config: SuiteConfig
    calibrated_sign: int
    suites: List[SuiteReport] = Field(default_factory=list)
    passed: bool = False

    def failures(self) -> List[CheckResult]:
        return [c for s in self.suites for c in s.checks if not c.passed]

    def to_json_dict(self) -> Dict:
        """Serialized form with "pass" keys, as written to report files."""
        return self.model_dump(mode="json", by_alias=True)


CheckSink = Callable[[CheckResult], None]


# ============================================================================
# SUITE SERVICE
# ============================================================================

class SuiteService:
    """
    Runs check suites and assembles reports.

    All methods are static; the check registry is read-only.
    """

    @staticmethod
    def run_suite(cfg: SuiteConfig, sink: Optional[CheckSink] = None) -> Report:
        """
        Execute every check of the selected suites.

        Args:
            cfg: Validated run configuration
            sink: Called with each CheckResult as soon as it is available

        Returns:
            Report; deterministic given cfg apart from wall times

        Example:
            >>> report = run_suite(SuiteConfig(n=2, suites=["liealg"]))
            >>> report.passed
            True
        """
        from tools import CheckEnv, get_check_registry

        registry = get_check_registry()
        env = CheckEnv(cfg)
        sign = calibrate_kks_sign()
        logger.info(
            f"🔍 Verifying n={cfg.n} theta={cfg.theta} k={cfg.k} "
            f"samples={cfg.samples} seed={cfg.seed} suites={cfg.suites}"
        )

        suites = [
            SuiteService.run_one(name, registry[name], env, sink)
            for name in cfg.suites
        ]
        report = Report(
            config=cfg,
            calibrated_sign=sign,
            suites=suites,
            passed=all(s.passed for s in suites),
        )

        total = sum(len(s.checks) for s in suites)
        failed = len(report.failures())
        if report.passed:
            logger.info(f"📊 {total} checks passed")
        else:
            logger.warning(f"📊 {failed} of {total} checks failed")
        return report

    @staticmethod
    def run_one(
        name: str,
        checks: List[Callable],
        env,
        sink: Optional[CheckSink] = None,
    ) -> SuiteReport:
        """
        Run one suite.

        Checks return structured entries and never raise; an unexpected
        exception here still becomes a failing entry so that the remaining
        checks run.
        """
        started = time.perf_counter()
        results = []
        for check in checks:
            try:
                entry = check(env)
            except Exception as e:
                logger.error(f"⚠️  {name}: check crashed: {e}", exc_info=True)
                entry = {
                    "name": getattr(check, "check_name", f"{name}.{check.__name__}"),
                    "anchor": "",
                    "tol": 0.0,
                    "max_residual": None,
                    "pass": False,
                    "error": str(e),
                }
            result = CheckResult.model_validate(entry)
            results.append(result)
            if sink is not None:
                sink(result)

        suite = SuiteReport(suite=name, checks=results, wall_time=time.perf_counter() - started)
        marker = "✅" if suite.passed else "❌"
        logger.info(f"{marker} suite {name}: {sum(c.passed for c in results)}/{len(results)} in {suite.wall_time:.2f}s")
        return suite


# ============================================================================
# CONVENIENCE FUNCTIONS
# ============================================================================

def run_suite(cfg: SuiteConfig, sink: Optional[CheckSink] = None) -> Report:
    """Convenience wrapper for running a verification."""
    return SuiteService.run_suite(cfg, sink)
