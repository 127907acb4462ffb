"""Command handlers: single points, sweeps, peak search, figure data and verification"""

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Optional

from app.dependencies import (
    get_figure_loader,
    get_sweep_repository,
    get_sweep_service,
    get_verification_service,
)
from app.exceptions import OutOfDomain
from app.models import SweepSpec, SweepTable, validate
from app.repositories import SweepRepository
from app.services import SweepService, VerificationService
from app.services.metrology import peak_qfi
from app.utils import EXIT_FAILURE, EXIT_OK, format_float, handle_command_errors, log_and_exit
from app.utils.data_loader import FigureCatalogueLoader

logger = logging.getLogger(__name__)


def _alpha_from_flag(alpha_abs: float) -> float:
    """--alpha takes |alpha|; the model stores the negative value"""
    if not (math.isfinite(alpha_abs) and alpha_abs > 0):
        raise OutOfDomain("alpha_abs", alpha_abs, "(0, inf)")
    return -alpha_abs


@handle_command_errors
def cmd_point(
    args: argparse.Namespace,
    repository: Optional[SweepRepository] = None,
    service: Optional[SweepService] = None
) -> int:
    """Evaluate one parameter point and print it as a one-row CSV"""
    params = validate(args.omega, args.beta, _alpha_from_flag(args.alpha), args.tau)
    service = service or get_sweep_service()
    repository = repository or get_sweep_repository()

    row = service.evaluate_point(params)
    repository.write_table(SweepTable(name="point", rows=[row]))
    return EXIT_OK


@handle_command_errors
def cmd_sweep(
    args: argparse.Namespace,
    repository: Optional[SweepRepository] = None,
    service: Optional[SweepService] = None
) -> int:
    """Evaluate a one-dimensional sweep and write it as CSV"""
    spec = SweepSpec.model_validate({
        "varying": args.param,
        "from": args.start,
        "to": args.stop,
        "steps": args.steps,
        "scale": args.scale,
        "omega": args.omega,
        "beta": args.beta,
        "alpha_abs": args.alpha,
        "tau": args.tau,
    })
    service = service or get_sweep_service()

    if args.out is None:
        name = "sweep"
        repository = repository or get_sweep_repository()
    else:
        out = Path(args.out)
        name = out.name
        repository = repository or get_sweep_repository(out.parent)

    table = service.run_sweep(spec, name=name)
    location = repository.write_table(table)
    logger.info(f"Sweep over {spec.varying} written to {location}")
    return EXIT_OK


@handle_command_errors
def cmd_peak(args: argparse.Namespace) -> int:
    """Locate the QFI maximum along beta and print `beta_star,qfi_star`"""
    result = peak_qfi(
        args.omega,
        _alpha_from_flag(args.alpha),
        args.tau,
        (args.start, args.stop),
        tol=args.tol
    )
    print(f"{format_float(result.beta_star)},{format_float(result.qfi_star)}")
    return EXIT_OK


@handle_command_errors
def cmd_figures(
    args: argparse.Namespace,
    repository: Optional[SweepRepository] = None,
    service: Optional[SweepService] = None,
    loader: Optional[FigureCatalogueLoader] = None
) -> int:
    """Emit one CSV per figure curve into the output directory"""
    service = service or get_sweep_service()
    repository = repository or get_sweep_repository(Path(args.out_dir))
    loader = loader or get_figure_loader()

    try:
        panels = loader.load_panels()
    except (OSError, ValueError) as e:
        log_and_exit(e, "loading the figure catalogue")

    written = 0
    for panel in panels:
        for name, spec in service.panel_specs(panel):
            repository.write_table(service.run_sweep(spec, name=name))
            written += 1

    logger.info(f"Wrote {written} figure tables")
    return EXIT_OK


@handle_command_errors
def cmd_verify(args: argparse.Namespace, service: Optional[VerificationService] = None) -> int:
    """Run the oracle suite, print one line per check, exit 0 only if all pass"""
    service = service or get_verification_service(tolerance_scale=args.tol)
    results = service.run_all()
    for result in results:
        print(result.report_line())
    sys.stdout.flush()

    if all(result.passed for result in results):
        return EXIT_OK
    failed = [result.name for result in results if not result.passed]
    logger.error(f"Verification failed: {', '.join(failed)}")
    return EXIT_FAILURE
