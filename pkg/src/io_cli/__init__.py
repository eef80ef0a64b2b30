"""File formats, plotting and subcommands of the command-line surface."""

from .commands import (
    CommandContext,
    run_design,
    run_fit,
    run_reduce,
    run_report,
    run_simulate,
)
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

__all__ = [
    "CommandContext",
    "FitReport",
    "RowDiagnostic",
    "plot_stress_strain",
    "read_fit_report",
    "read_machines",
    "read_measurements",
    "read_points",
    "run_design",
    "run_fit",
    "run_reduce",
    "run_report",
    "run_simulate",
    "write_fit_report",
    "write_machines",
    "write_measurements",
    "write_points",
]
