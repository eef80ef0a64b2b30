"""
File formats exchanged between CLI subcommands.

CSV files have a mandatory header row and fixed columns; floats are written
with their shortest round-trip representation so every file parses back
bit-exactly. JSON documents are written with sorted keys.
"""

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import pandas as pd
from loguru import logger

from analysis import FitResult, PlasticLine
from constitutive import HardeningLaw, MaterialModel, engineering_strain
from machine_model import ActuatorSpec, BeamSpec, Machine, MeasurementRecord, SpecimenSpec
from reduction import StressStrainPoint
from utils.errors import ConfigError, MicrotensileError

PathLike = Union[str, Path]

MEASUREMENT_COLUMNS = ["machine_id", "dl_al_m", "dl_ac_m"]
POINT_COLUMNS = ["machine_id", "strain", "stress_pa"]


@dataclass(frozen=True)
class RowDiagnostic:
    """A CSV row that could not be parsed; ``row`` counts parsed data rows from 1."""

    row: Optional[int]
    content: str
    reason: str

    def __str__(self) -> str:
        where = f"row {self.row}" if self.row is not None else "row"
        return f"{where}: {self.reason} [{self.content}]"


@dataclass
class FitReport:
    """Contents of a fit JSON file."""

    campaign: str
    label: str
    thickness: float
    fit: FitResult
    points: List[StressStrainPoint] = field(default_factory=list)
    hardening: Optional[FitResult] = None


def _format_float(value: float) -> str:
    return repr(float(value))


def _write_json(path: PathLike, payload: Dict[str, Any]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    logger.info(f"Wrote {path}")
    return path


def _read_json(path: PathLike) -> Dict[str, Any]:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ConfigError(f"Cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path} is not valid JSON: {exc}") from exc


def _write_csv(path: PathLike, columns: List[str], rows: List[Tuple[str, float, float]]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame = pd.DataFrame(
        [(name, _format_float(a), _format_float(b)) for name, a, b in rows],
        columns=columns,
        dtype=str,
    )
    frame.to_csv(path, index=False, lineterminator="\n")
    logger.info(f"Wrote {len(rows)} rows to {path}")
    return path


def _read_csv(
    path: PathLike, columns: List[str]
) -> Tuple[List[Tuple[str, float, float]], List[RowDiagnostic]]:
    """Parse a three-column CSV, collecting malformed rows instead of failing."""
    diagnostics: List[RowDiagnostic] = []

    def on_bad_line(fields: List[str]) -> None:
        diagnostics.append(
            RowDiagnostic(None, ",".join(fields), f"expected {len(columns)} fields, got {len(fields)}")
        )
        return None

    try:
        frame = pd.read_csv(
            path,
            dtype=str,
            keep_default_na=False,
            engine="python",
            on_bad_lines=on_bad_line,
            skip_blank_lines=True,
            quoting=csv.QUOTE_NONE,
        )
    except OSError as exc:
        raise ConfigError(f"Cannot read {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise ConfigError(f"{path} is not UTF-8 text: {exc}") from exc
    except pd.errors.EmptyDataError as exc:
        raise ConfigError(f"{path} is empty; a header row is mandatory") from exc
    except pd.errors.ParserError as exc:
        raise ConfigError(f"{path} cannot be parsed as CSV: {exc}") from exc
    if list(frame.columns) != columns:
        raise ConfigError(
            f"{path}: header must be {','.join(columns)}, got {','.join(map(str, frame.columns))}"
        )

    rows: List[Tuple[str, float, float]] = []
    for offset, cells in enumerate(frame.itertuples(index=False, name=None)):
        # Short rows come back padded with NaN.
        name, first, second = (cell if isinstance(cell, str) else "" for cell in cells)
        row = offset + 1
        content = f"{name},{first},{second}"
        try:
            values = (float(first), float(second))
        except ValueError:
            diagnostics.append(RowDiagnostic(row, content, "missing or non-numeric value"))
            continue
        if not name.strip():
            diagnostics.append(RowDiagnostic(row, content, "empty machine_id"))
        elif '"' in name:
            diagnostics.append(RowDiagnostic(row, content, "quote character in machine_id"))
        elif not all(math.isfinite(v) for v in values):
            diagnostics.append(RowDiagnostic(row, content, "non-finite value"))
        else:
            rows.append((name.strip(), *values))
    for diagnostic in diagnostics:
        logger.warning(f"{path}: {diagnostic}")
    return rows, diagnostics


def write_measurements(path: PathLike, records: Sequence[MeasurementRecord]) -> Path:
    return _write_csv(path, MEASUREMENT_COLUMNS, [(r.machine_id, r.dl_al, r.dl_ac) for r in records])


def read_measurements(path: PathLike) -> Tuple[List[MeasurementRecord], List[RowDiagnostic]]:
    rows, diagnostics = _read_csv(path, MEASUREMENT_COLUMNS)
    return [MeasurementRecord(name, dl_al, dl_ac) for name, dl_al, dl_ac in rows], diagnostics


def write_points(path: PathLike, points: Sequence[StressStrainPoint]) -> Path:
    return _write_csv(path, POINT_COLUMNS, [(p.machine_id, p.strain, p.stress) for p in points])


def read_points(path: PathLike) -> Tuple[List[StressStrainPoint], List[RowDiagnostic]]:
    rows, diagnostics = _read_csv(path, POINT_COLUMNS)
    points = []
    for name, strain, stress in rows:
        try:
            points.append(StressStrainPoint(name, strain, stress))
        except MicrotensileError as exc:
            diagnostics.append(RowDiagnostic(None, f"{name},{strain},{stress}", str(exc)))
    return points, diagnostics


# Machines


def material_to_dict(model: MaterialModel) -> Dict[str, Any]:
    return {
        "E": model.youngs_modulus,
        "law": model.law.value,
        "sigma_y": model.yield_strength,
        "K": model.hardening_coefficient,
        "n": model.hardening_exponent,
        "label": model.label,
    }


def material_from_dict(data: Dict[str, Any]) -> MaterialModel:
    return MaterialModel(
        youngs_modulus=data["E"],
        law=data.get("law", HardeningLaw.PERFECTLY_PLASTIC.value),
        yield_strength=data.get("sigma_y"),
        hardening_coefficient=data.get("K"),
        hardening_exponent=data.get("n"),
        label=data.get("label", ""),
    )


def _beam_to_dict(beam: BeamSpec) -> Dict[str, float]:
    return {"length": beam.deposited_length, "width": beam.width, "thickness": beam.thickness}


def _beam_from_dict(data: Dict[str, Any]) -> BeamSpec:
    return BeamSpec(data["length"], data["width"], data["thickness"])


def machine_to_dict(machine: Machine) -> Dict[str, Any]:
    return {
        "id": machine.id,
        "actuator": {
            **_beam_to_dict(machine.actuator.beam),
            "E": machine.actuator.youngs_modulus,
            "alpha_dt": machine.actuator.alpha_dt,
        },
        "specimen": {
            **_beam_to_dict(machine.specimen.beam),
            "alpha_dt": machine.specimen.alpha_dt,
            "material": material_to_dict(machine.specimen.material),
        },
    }


def machine_from_dict(data: Dict[str, Any]) -> Machine:
    actuator, specimen = data["actuator"], data["specimen"]
    return Machine(
        id=data["id"],
        actuator=ActuatorSpec(_beam_from_dict(actuator), actuator["E"], actuator["alpha_dt"]),
        specimen=SpecimenSpec(
            _beam_from_dict(specimen),
            material_from_dict(specimen["material"]),
            specimen["alpha_dt"],
        ),
    )


def write_machines(path: PathLike, machines: Sequence[Machine], campaign: str) -> Path:
    return _write_json(
        path, {"campaign": campaign, "machines": [machine_to_dict(m) for m in machines]}
    )


def read_machines(path: PathLike) -> List[Machine]:
    data = _read_json(path)
    try:
        return [machine_from_dict(entry) for entry in data["machines"]]
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"{path}: malformed machine entry ({exc})") from exc
    except MicrotensileError as exc:
        raise ConfigError(f"{path}: invalid machine: {exc}") from exc
    except ValueError as exc:
        raise ConfigError(f"{path}: malformed machine entry ({exc})") from exc


# Fits


def fit_to_dict(fit: FitResult) -> Dict[str, Any]:
    return {
        "yield_strength": fit.yield_strength,
        "elastic_modulus_used": fit.elastic_modulus_used,
        "plastic_line": {"slope": fit.plastic_line.slope, "intercept": fit.plastic_line.intercept},
        "residual_rms": fit.residual_rms,
        "points_used": fit.points_used,
        "model_fit": material_to_dict(fit.model_fit) if fit.model_fit else None,
        "method": fit.method,
        "plastic_threshold": fit.plastic_threshold,
        "offset": fit.offset,
        "plateau_like": fit.plateau_like,
    }


def fit_from_dict(data: Dict[str, Any]) -> FitResult:
    line = data["plastic_line"]
    return FitResult(
        yield_strength=data["yield_strength"],
        elastic_modulus_used=data["elastic_modulus_used"],
        plastic_line=PlasticLine(line["slope"], line["intercept"]),
        residual_rms=data["residual_rms"],
        points_used=data["points_used"],
        model_fit=material_from_dict(data["model_fit"]) if data.get("model_fit") else None,
        method=data.get("method", "linear-extrapolation"),
        plastic_threshold=data.get("plastic_threshold", 0.0),
        offset=data.get("offset", 0.0),
        plateau_like=data.get("plateau_like", False),
    )


def write_fit_report(path: PathLike, report: FitReport) -> Path:
    return _write_json(
        path,
        {
            "campaign": report.campaign,
            "label": report.label,
            "thickness_m": report.thickness,
            "fit": fit_to_dict(report.fit),
            "hardening": fit_to_dict(report.hardening) if report.hardening else None,
            "points": [
                {
                    "machine_id": p.machine_id,
                    "strain": p.strain,
                    "engineering_strain": engineering_strain(p.strain),
                    "stress_pa": p.stress,
                }
                for p in report.points
            ],
        },
    )


def read_fit_report(path: PathLike) -> FitReport:
    data = _read_json(path)
    try:
        return FitReport(
            campaign=data.get("campaign", ""),
            label=data.get("label", ""),
            thickness=float(data["thickness_m"]),
            fit=fit_from_dict(data["fit"]),
            points=[
                StressStrainPoint(p["machine_id"], p["strain"], p["stress_pa"])
                for p in data.get("points", [])
            ],
            hardening=fit_from_dict(data["hardening"]) if data.get("hardening") else None,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"{path}: malformed fit report ({exc})") from exc
