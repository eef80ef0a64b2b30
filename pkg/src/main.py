#!/usr/bin/env python3
"""
Main entry point for the micro-tensile machine toolkit.

Subcommands chain through files in the output directory::

    microtensile design   --config campaign.json --out run/
    microtensile simulate --config campaign.json --out run/ --seed 7
    microtensile reduce   --config campaign.json --out run/
    microtensile fit      --config campaign.json --out run/
    microtensile report   run250/fit.json run500/fit.json --out report/

Exit codes: 0 success, 2 usage or configuration error, 3 solver or fit failure.
"""

import argparse
import sys
from pathlib import Path
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from config import Settings, load_campaign_config
from io_cli import (
    CommandContext,
    run_design,
    run_fit,
    run_reduce,
    run_report,
    run_simulate,
)
from utils.errors import (
    FitError,
    MicrotensileError,
    ReductionError,
    SolverError,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3


class MicrotensileApplication:
    """Runs one subcommand with logging configured from :class:`Settings`."""

    def __init__(self, settings: Settings):
        self.settings = settings
        self.setup_logging()

    def setup_logging(self):
        """Configure logging for the application."""
        logger.remove()  # Remove default handler

        logger.add(
            sys.stderr,
            level=self.settings.log_level,
            format="<green>{time:YYYY-MM-DD HH:mm:ss}</green> | "
                   "<level>{level: <8}</level> | "
                   "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - "
                   "<level>{message}</level>"
        )

        if self.settings.log_file:
            log_path = Path(self.settings.log_file)
            log_path.parent.mkdir(parents=True, exist_ok=True)

            logger.add(
                log_path,
                level=self.settings.log_level,
                rotation=self.settings.log_rotation,
                retention="1 week",
                format="{time:YYYY-MM-DD HH:mm:ss} | {level: <8} | {name}:{function}:{line} - {message}"
            )

    def run(self, args: argparse.Namespace) -> int:
        """Dispatch to the subcommand and map failures to an exit code."""
        ctx = CommandContext(self.settings, Path(args.out), strict=args.strict)
        try:
            if args.command == "report":
                comparison = run_report(args.fits, ctx, bulk_reference=args.bulk_reference)
                print(comparison.render())
                return EXIT_OK

            config = load_campaign_config(args.config)
            logger.info(f"Campaign {config.name!r}: {args.command}")
            if args.command == "design":
                design = run_design(config, ctx)
                print(f"designed {len(design.machines)} machines")
            elif args.command == "simulate":
                run_simulate(config, ctx, args.machines, args.seed)
            elif args.command == "reduce":
                result = run_reduce(config, ctx, args.measurements, args.machines)
                print(f"reduced {len(result.points)} points, {len(result.failures)} failures")
            elif args.command == "fit":
                report = run_fit(config, ctx, args.points)
                print(f"yield_strength_pa: {report.fit.yield_strength!r}")
            return EXIT_OK

        except ReductionError as e:
            logger.error(f"Reduction failed: {e}")
            return EXIT_FAILURE
        except (SolverError, FitError) as e:
            logger.error(f"{args.command} failed: {e}")
            return EXIT_FAILURE
        except MicrotensileError as e:
            logger.error(f"{args.command}: {e}")
            return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default="out", help="Output directory (default: out)")
    common.add_argument(
        "--strict",
        action="store_true",
        help="Fail on malformed rows or records that cannot be reduced",
    )

    campaign = argparse.ArgumentParser(add_help=False, parents=[common])
    campaign.add_argument("--config", required=True, type=Path, help="Campaign JSON file")

    parser = argparse.ArgumentParser(
        prog="microtensile",
        description="Design, simulate and analyse residual-stress micro-tensile machines",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("design", parents=[campaign], help="Design machines for target strains")

    simulate = sub.add_parser("simulate", parents=[campaign], help="Synthesize measurements")
    simulate.add_argument("--machines", type=Path, help="Machines JSON (default: in --out)")
    simulate.add_argument("--seed", type=int, help="Override the campaign seed")

    reduce = sub.add_parser("reduce", parents=[campaign], help="Reduce measurements to points")
    reduce.add_argument("--measurements", type=Path, help="Measurements CSV (default: in --out)")
    reduce.add_argument("--machines", type=Path, help="Machines JSON (default: in --out)")

    fit = sub.add_parser("fit", parents=[campaign], help="Fit yield strength to points")
    fit.add_argument("--points", type=Path, help="Points CSV (default: in --out)")

    report = sub.add_parser("report", parents=[common], help="Compare fits across thicknesses")
    report.add_argument("fits", nargs="+", type=Path, help="Fit JSON files")
    report.add_argument(
        "--bulk-reference",
        action="store_true",
        help="Add the ratio to bulk aluminium yield strength",
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    try:
        settings = Settings()
    except ValidationError as e:
        print(f"Invalid settings: {e}", file=sys.stderr)
        return EXIT_USAGE
    return MicrotensileApplication(settings).run(args)


if __name__ == "__main__":
    # Check Python version
    if sys.version_info < (3, 8):
        print("Python 3.8 or higher is required")
        sys.exit(1)

    sys.exit(main())
