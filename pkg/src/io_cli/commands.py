"""
Implementation of the ``design``, ``simulate``, ``reduce``, ``fit`` and
``report`` subcommands.

Each command reads its inputs, runs one library stage and writes its outputs
under the output directory. Failures are raised as :mod:`utils.errors`
exceptions; the entry point maps them to exit codes.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from loguru import logger

from analysis import (
    BULK_ALUMINIUM_YIELD,
    CampaignDesign,
    ThicknessComparison,
    compare_thicknesses,
    design_campaign,
    fit_hardening,
    fit_yield,
)
from config import CampaignConfig, Settings
from machine_model import (
    linear_displacement_estimate,
    machine_seeds,
    solve_many,
    synthesize_measurement,
)
from reduction import CampaignReduction, StressStrainPoint, reduce_campaign
from utils.errors import ConfigError, DesignError, ReductionError

from .files import (
    FitReport,
    RowDiagnostic,
    read_fit_report,
    read_machines,
    read_measurements,
    read_points,
    write_fit_report,
    write_machines,
    write_measurements,
    write_points,
)
from .plotting import plot_stress_strain

REPORT_FILES = ("report.txt", "report.csv", "report.json", "stress_strain.svg")


@dataclass
class CommandContext:
    """State shared by every subcommand of one invocation."""

    settings: Settings
    out_dir: Path
    strict: bool = False

    def output(self, name: str) -> Path:
        return self.out_dir / name


def _check_rows(path: Path, diagnostics: List[RowDiagnostic], strict: bool) -> None:
    if diagnostics and strict:
        details = "\n".join(f"  {d}" for d in diagnostics)
        raise ConfigError(f"{path}: {len(diagnostics)} malformed rows\n{details}")


def run_design(config: CampaignConfig, ctx: CommandContext) -> CampaignDesign:
    """Design (or solve the explicitly declared) machines and predict their points."""
    settings = ctx.settings
    if config.design is None:
        machines = config.explicit_machines()
        states = solve_many(machines, settings.solver_workers, settings.solver_max_iterations)
        design = CampaignDesign(
            machines=machines,
            predicted_points=[
                StressStrainPoint(s.machine_id, s.specimen_log_strain, s.specimen_stress)
                for s in states
            ],
            target_strains=[s.specimen_log_strain for s in states],
        )
    else:
        spec = config.design
        calibration = config.to_calibration()
        design = design_campaign(
            config.actuator_template(calibration=calibration),
            config.specimen_template(calibration=calibration),
            spec.targets,
            spec.length_bounds,
            vary=spec.vary,
            rel_tol=spec.rel_tol or settings.design_rel_tol,
            id_prefix=spec.id_prefix,
            max_iterations=settings.solver_max_iterations,
        )
        if not design.feasible:
            details = "\n".join(f"  {t.message}" for t in design.infeasible)
            raise DesignError(
                f"{len(design.infeasible)} of {len(spec.targets)} targets are infeasible\n{details}"
            )

    write_machines(ctx.output(config.output.machines), design.machines, config.name)
    write_points(ctx.output(config.output.predicted), design.predicted_points)
    return design


def run_simulate(
    config: CampaignConfig,
    ctx: CommandContext,
    machines_path: Optional[Path] = None,
    seed: Optional[int] = None,
) -> Path:
    """Solve every machine and write its synthetic displacement readout."""
    machines = read_machines(machines_path or ctx.output(config.output.machines))
    states = solve_many(
        machines, ctx.settings.solver_workers, ctx.settings.solver_max_iterations
    )
    campaign_seed = config.seed if seed is None else seed
    seeds = machine_seeds(campaign_seed, len(machines))
    records = []
    for machine, state, machine_seed in zip(machines, states, seeds):
        logger.debug(
            f"{machine.id}: u={state.junction_displacement:.6e} m, two-spring estimate "
            f"{linear_displacement_estimate(machine):.6e} m"
        )
        records.append(synthesize_measurement(machine, state, config.noise_sd, machine_seed))
    logger.info(
        f"Simulated {len(records)} machines with noise sd {config.noise_sd:.3g} m, "
        f"seed {campaign_seed}"
    )
    return write_measurements(ctx.output(config.output.measurements), records)


def run_reduce(
    config: CampaignConfig,
    ctx: CommandContext,
    measurements_path: Optional[Path] = None,
    machines_path: Optional[Path] = None,
) -> CampaignReduction:
    """Reduce measured displacements to stress-strain points.

    Malformed rows and failed records are reported and skipped; with
    ``strict`` the first raises :class:`ConfigError` and the second
    :class:`ReductionError` before anything is written.
    """
    measurements_path = measurements_path or ctx.output(config.output.measurements)
    records, diagnostics = read_measurements(measurements_path)
    _check_rows(measurements_path, diagnostics, ctx.strict)
    machines = read_machines(machines_path or ctx.output(config.output.machines))

    result = reduce_campaign(records, machines, config.to_calibration())
    if result.failures and ctx.strict:
        details = "\n".join(f"  {f.machine_id}: {f.reason}" for f in result.failures)
        raise ReductionError(f"{len(result.failures)} records failed reduction\n{details}")
    write_points(ctx.output(config.output.points), result.points)
    return result


def run_fit(
    config: CampaignConfig,
    ctx: CommandContext,
    points_path: Optional[Path] = None,
) -> FitReport:
    """Extract the yield strength (and optionally hardening) from reduced points."""
    points_path = points_path or ctx.output(config.output.points)
    points, diagnostics = read_points(points_path)
    _check_rows(points_path, diagnostics, ctx.strict)

    options = config.fit
    modulus = config.elastic_modulus()
    fit = fit_yield(
        points,
        modulus,
        plastic_threshold=options.plastic_threshold,
        yield_guess=options.yield_guess,
        offset=options.offset,
    )
    hardening = None
    if options.hardening:
        hardening = fit_hardening(
            points,
            modulus,
            plastic_threshold=options.plastic_threshold,
            yield_guess=options.yield_guess,
        )

    report = FitReport(
        campaign=config.name,
        label=config.specimen_material().label or config.name,
        thickness=config.specimen.thickness,
        fit=fit,
        points=sorted(points, key=lambda p: (p.strain, p.machine_id)),
        hardening=hardening,
    )
    write_fit_report(ctx.output(config.output.fit), report)
    return report


def _comparison_payload(
    comparison: ThicknessComparison, reports: Sequence[FitReport]
) -> Dict[str, object]:
    return {
        "monotone_decreasing": comparison.monotone_decreasing,
        "strength_ratio": comparison.strength_ratio,
        "rows": comparison.to_frame().to_dict(orient="records"),
        "sources": sorted(
            ({"campaign": r.campaign, "label": r.label, "thickness_m": r.thickness} for r in reports),
            key=lambda s: s["thickness_m"],
        ),
    }


def run_report(
    fit_paths: Sequence[Path],
    ctx: CommandContext,
    bulk_reference: bool = False,
) -> ThicknessComparison:
    """Compare fits across thicknesses; write the table (txt, csv, json) and the plot."""
    reports = [read_fit_report(path) for path in fit_paths]
    fits = {}
    for path, report in zip(fit_paths, reports):
        if report.thickness in fits:
            raise ConfigError(f"{path}: thickness {report.thickness:.4g} m appears twice")
        fits[report.thickness] = report.fit
    if len(fits) < 2:
        raise ConfigError("report needs fit files for at least two thicknesses")

    comparison = compare_thicknesses(
        fits, bulk_yield_strength=BULK_ALUMINIUM_YIELD if bulk_reference else None
    )
    text_path, csv_path, json_path, svg_path = (ctx.output(name) for name in REPORT_FILES)
    ctx.out_dir.mkdir(parents=True, exist_ok=True)
    text_path.write_text(comparison.render() + "\n", encoding="utf-8")
    comparison.to_frame().to_csv(csv_path, index=False, lineterminator="\n")
    json_path.write_text(
        json.dumps(_comparison_payload(comparison, reports), indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
    )
    plot_stress_strain(reports, svg_path)
    logger.info(f"Wrote report for {len(reports)} fits to {ctx.out_dir}")
    return comparison
