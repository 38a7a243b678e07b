"""
Run configuration for verification suites.

SuiteConfig is the validated description of a single `atlas verify` run.
Defaults come from config.settings so that .env overrides apply.
"""

from typing import List

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .settings import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    FLOW_DT,
    K_MAX,
    N_MAX,
    N_MIN,
    SUITE_NAMES,
    TOL_EXACT,
    TOL_FD,
    WORKERS,
)


class SuiteConfig(BaseModel):
    """
    Configuration of a verification run.

    Attributes:
        n: Matrix size of sl(n, C)
        theta: 1-based simple-root indices fixing the flag type
        k: Exterior-power degree for the representation suite
        samples: Number of random samples per sampled check
        seed: Base seed; per-sample seeds are seed ^ sample_index
        tol_exact: Tolerance for exact-oracle checks
        tol_fd: Tolerance for finite-difference checks
        suites: Suites to run ("all" expands to every suite)
        flow_dt: RK4 time step used by flow-based checks
        workers: Thread count for sample evaluation
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(default=2, ge=N_MIN, le=N_MAX)
    theta: List[int] = Field(default_factory=list)
    k: int = 1
    samples: int = Field(default=DEFAULT_SAMPLES, ge=1)
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2**64)
    tol_exact: float = Field(default=TOL_EXACT, gt=0)
    tol_fd: float = Field(default=TOL_FD, gt=0)
    suites: List[str] = Field(default_factory=lambda: list(SUITE_NAMES))
    flow_dt: float = Field(default=FLOW_DT, gt=0)
    workers: int = Field(default=WORKERS, ge=1)

    @field_validator("theta")
    @classmethod
    def _sorted_unique_theta(cls, value: List[int]) -> List[int]:
        return sorted(set(int(i) for i in value))

    @field_validator("suites")
    @classmethod
    def _expand_suites(cls, value: List[str]) -> List[str]:
        if not value or "all" in value:
            return list(SUITE_NAMES)
        unknown = [s for s in value if s not in SUITE_NAMES]
        if unknown:
            raise ValueError(f"Unknown suites {unknown}; choose from {list(SUITE_NAMES)}")
        # keep canonical order
        return [s for s in SUITE_NAMES if s in value]

    @model_validator(mode="after")
    def _check_cross_fields(self) -> "SuiteConfig":
        bad = [i for i in self.theta if not 1 <= i <= self.n - 1]
        if bad:
            raise ValueError(f"theta indices {bad} are outside [1, {self.n - 1}]")
        if len(self.theta) == self.n - 1:
            raise ValueError("theta cannot contain every simple root (H0 would vanish)")
        upper = min(K_MAX, self.n - 1)
        if not 1 <= self.k <= upper:
            raise ValueError(f"k={self.k} must lie in [1, {upper}] for n={self.n}")
        return self
