"""
Atlas - Numerical Atlas of Adjoint Orbits in sl(n, C)
Command-Line Application

Entry point for the `atlas` command. `atlas verify` runs the check suites
and writes a JSON report; the other verbs expose single kernels with
matrices in the [re, im] JSON format.

Exit codes: 0 all checks pass, 1 a check failed or a kernel rejected its
input, 2 usage error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from pydantic import ValidationError

from clients.matrix_io import load_matrix, to_json_line, write_report
from config import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    LOG_FORMAT,
    LOG_LEVEL,
    REPORTS_DIR,
    SUITE_NAMES,
    TOL_EXACT,
    TOL_FD,
    WORKERS,
    SuiteConfig,
)
from core.errors import AtlasError
from services.command_service import CommandService
from services.suite_service import CheckResult, Report, SuiteService

logger = logging.getLogger("atlas")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# ============================================================================
# ARGUMENT PARSING
# ============================================================================

def _add_shape_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, default=2, help="matrix size of sl(n, C)")
    parser.add_argument("--theta", type=int, nargs="*", default=[], help="1-based simple roots of the flag type")


def _add_sampling_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)


def _add_run_args(parser: argparse.ArgumentParser) -> None:
    _add_shape_args(parser)
    _add_sampling_args(parser)
    parser.add_argument("--k", type=int, default=1, help="exterior-power degree")
    parser.add_argument("--tol-exact", type=float, default=TOL_EXACT)
    parser.add_argument("--tol-fd", type=float, default=TOL_FD)
    parser.add_argument("--workers", type=int, default=WORKERS)
    parser.add_argument("--report", default=None, help="write the JSON report here; a bare file name goes to the reports directory")


def build_parser() -> argparse.ArgumentParser:
    """Argument parser for every verb."""
    parser = argparse.ArgumentParser(
        prog="atlas",
        description="Numerical atlas of adjoint orbits, cotangent bundles and Lagrangean graphs in sl(n, C).",
    )
    parser.add_argument("--log-level", default=LOG_LEVEL)
    verbs = parser.add_subparsers(dest="verb", required=True)

    verify = verbs.add_parser("verify", help="run check suites")
    _add_run_args(verify)
    verify.add_argument("--suite", nargs="+", default=["all"], choices=["all", *SUITE_NAMES])

    orbit = verbs.add_parser("orbit", help="orbit kernels").add_subparsers(dest="action", required=True)
    for action in ("factorize", "project"):
        p = orbit.add_parser(action)
        _add_shape_args(p)
        p.add_argument("--matrix", required=True, help="orbit point Y as JSON or a .json file")

    cotangent = verbs.add_parser("cotangent", help="T*F kernels").add_subparsers(dest="action", required=True)
    for action in ("iota", "mu", "flow"):
        p = cotangent.add_parser(action)
        _add_shape_args(p)
        p.add_argument("--matrix", required=True, help="orbit point Y")
        if action == "flow":
            p.add_argument("--generator", required=True, help="algebra element Z")
            p.add_argument("--t", type=float, default=1.0)
            p.add_argument("--steps", type=int, default=None)
    _add_run_args(cotangent.add_parser("verify"))

    product = verbs.add_parser("product", help="flag product kernels").add_subparsers(dest="action", required=True)
    p = product.add_parser("embed")
    _add_shape_args(p)
    p.add_argument("--g", required=True, help="element of SL(n, C)")
    for action in ("transversal", "residual"):
        p = product.add_parser(action)
        _add_shape_args(p)
        p.add_argument("--matrix", required=True, help="orbit point Y")

    rep = verbs.add_parser("rep", help="representation kernels").add_subparsers(dest="action", required=True)
    for action in ("moment", "height", "phi"):
        p = rep.add_parser(action)
        p.add_argument("--n", type=int, default=2)
        p.add_argument("--k", type=int, default=1)
        p.add_argument("--g", required=True, help="element of SL(n, C)")
        if action == "height":
            p.add_argument("--H", required=True, help="algebra element")
    _add_run_args(rep.add_parser("verify"))

    lagrangian = verbs.add_parser("lagrangian", help="Lagrangean graph kernels").add_subparsers(
        dest="action", required=True
    )
    p = lagrangian.add_parser("residual")
    _add_shape_args(p)
    _add_sampling_args(p)
    p.add_argument("--kind", default="plain", choices=["plain", "random", "torus", "identity"])
    for action in ("antiholo", "isometry"):
        p = lagrangian.add_parser(action)
        _add_shape_args(p)
        _add_sampling_args(p)
    p = lagrangian.add_parser("fixed-points")
    p.add_argument("--count", type=int, default=100)

    return parser


# ============================================================================
# VERB HANDLERS
# ============================================================================

def _suite_config(args: argparse.Namespace, suites: List[str]) -> SuiteConfig:
    return SuiteConfig(
        n=args.n,
        theta=args.theta,
        k=args.k,
        samples=args.samples,
        seed=args.seed,
        tol_exact=args.tol_exact,
        tol_fd=args.tol_fd,
        suites=suites,
        workers=args.workers,
    )


def _print_line(result: CheckResult) -> None:
    print(to_json_line(result.model_dump(mode="json", by_alias=True)), flush=True)


def _report_path(path: str) -> Path:
    target = Path(path)
    return REPORTS_DIR / target if target.parent == Path(".") else target


def _finish(report: Report, path: Optional[str]) -> int:
    if path:
        write_report(report.to_json_dict(), _report_path(path))
    for failure in report.failures():
        logger.warning(f"❌ {failure.name}: {failure.error or failure.max_residual}")
    return EXIT_OK if report.passed else EXIT_FAILED


def run_verify(args: argparse.Namespace, suites: List[str]) -> int:
    cfg = _suite_config(args, suites)
    report = SuiteService.run_suite(cfg, sink=_print_line)
    return _finish(report, args.report)


def _inspection_handlers() -> Dict[tuple, Callable[[argparse.Namespace], Dict[str, Any]]]:
    return {
        ("orbit", "factorize"): lambda a: CommandService.orbit_factorize(a.n, a.theta, load_matrix(a.matrix)),
        ("orbit", "project"): lambda a: CommandService.orbit_project(a.n, a.theta, load_matrix(a.matrix)),
        ("cotangent", "iota"): lambda a: CommandService.cotangent_iota(a.n, a.theta, load_matrix(a.matrix)),
        ("cotangent", "mu"): lambda a: CommandService.cotangent_mu(a.n, a.theta, load_matrix(a.matrix)),
        ("cotangent", "flow"): lambda a: CommandService.cotangent_flow(
            a.n, a.theta, load_matrix(a.matrix), load_matrix(a.generator), a.t, a.steps
        ),
        ("product", "embed"): lambda a: CommandService.product_embed(a.n, a.theta, load_matrix(a.g)),
        ("product", "transversal"): lambda a: CommandService.product_transversal(
            a.n, a.theta, load_matrix(a.matrix)
        ),
        ("product", "residual"): lambda a: CommandService.product_residual(a.n, a.theta, load_matrix(a.matrix)),
        ("rep", "moment"): lambda a: CommandService.rep_moment(a.n, a.k, load_matrix(a.g)),
        ("rep", "height"): lambda a: CommandService.rep_height(a.n, a.k, load_matrix(a.g), load_matrix(a.H)),
        ("rep", "phi"): lambda a: CommandService.rep_phi(a.n, a.k, load_matrix(a.g)),
        ("lagrangian", "residual"): lambda a: CommandService.lagrangian_residual(
            a.n, a.theta, a.kind, a.samples, a.seed
        ),
        ("lagrangian", "antiholo"): lambda a: CommandService.lagrangian_antiholo(a.n, a.theta, a.samples, a.seed),
        ("lagrangian", "isometry"): lambda a: CommandService.lagrangian_isometry(a.n, a.theta, a.samples, a.seed),
        ("lagrangian", "fixed-points"): lambda a: CommandService.lagrangian_fixed_points(a.count),
    }


def dispatch(args: argparse.Namespace) -> int:
    """Run the verb in args and return the exit code."""
    if args.verb == "verify":
        return run_verify(args, args.suite)
    if getattr(args, "action", None) == "verify":
        return run_verify(args, [args.verb])

    handler = _inspection_handlers()[(args.verb, args.action)]
    print(json.dumps(handler(args), indent=2))
    return EXIT_OK


# ============================================================================
# MAIN
# ============================================================================

def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    logging.basicConfig(level=args.log_level.upper(), format=LOG_FORMAT, stream=sys.stderr)

    try:
        return dispatch(args)
    except ValidationError as e:
        print(f"invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AtlasError as e:
        logger.error(f"❌ {args.verb} {getattr(args, 'action', '')}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
