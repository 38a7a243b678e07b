"""
Business Logic Services Module

This module contains the orchestration logic of the atlas:
- Sampling service: Seeded random inputs for every suite
- Suite service: Runs check suites and assembles reports
- Command service: Handlers for the inspection verbs of the CLI

Services orchestrate kernels and checks; the mathematics lives in core.
"""

from .sampling_service import (
    SamplingService,
    sample_group_element,
    sample_orbit_point,
    sample_unitary,
)

from .suite_service import (
    CheckResult,
    Report,
    SuiteReport,
    SuiteService,
    run_suite,
)

from .command_service import CommandService

__all__ = [
    # Sampling Service
    "SamplingService",
    "sample_group_element",
    "sample_orbit_point",
    "sample_unitary",

    # Suite Service
    "CheckResult",
    "Report",
    "SuiteReport",
    "SuiteService",
    "run_suite",

    # Command Service
    "CommandService",
]
