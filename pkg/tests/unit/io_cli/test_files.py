"""Tests for the CSV and JSON formats shared by the subcommands."""

import json
import math

import pytest

from analysis import FitResult, PlasticLine
from constitutive import HardeningLaw, MaterialModel
from io_cli import (
    FitReport,
    read_fit_report,
    read_machines,
    read_measurements,
    read_points,
    write_fit_report,
    write_machines,
    write_measurements,
    write_points,
)
from machine_model import Machine, MeasurementRecord, SpecimenSpec
from reduction import StressStrainPoint
from utils.errors import ConfigError


def test_measurements_parse_back_exactly(tmp_path):
    records = [
        MeasurementRecord("m00", 6.5e-08 - 1e-9 / 3, 2.318181818181e-06),
        MeasurementRecord("m01", -1.2345678901234567e-06, 3.0000000000000004e-06),
    ]
    path = write_measurements(tmp_path / "measurements.csv", records)
    lines = path.read_text().splitlines()
    assert lines[0] == "machine_id,dl_al_m,dl_ac_m"
    assert len(lines) == 3
    parsed, diagnostics = read_measurements(path)
    assert diagnostics == []
    assert parsed == records


def test_points_parse_back_exactly(tmp_path):
    points = [StressStrainPoint("m00", 0.0123456789012345, 400000000.00000006)]
    parsed, diagnostics = read_points(write_points(tmp_path / "points.csv", points))
    assert parsed == points
    assert diagnostics == []


def test_malformed_rows_become_diagnostics(tmp_path):
    path = tmp_path / "measurements.csv"
    path.write_text(
        "machine_id,dl_al_m,dl_ac_m\n"
        "m00,1e-7,2e-6\n"
        "m01,abc,2e-6\n"
        "m02,1e-7\n"
        "m03,1e-7,2e-6,9\n"
        "m04,inf,2e-6\n"
        ",1e-7,2e-6\n"
        "m05,-3e-7,2.5e-6\n"
    )
    records, diagnostics = read_measurements(path)
    assert [r.machine_id for r in records] == ["m00", "m05"]
    reasons = " | ".join(str(d) for d in diagnostics)
    assert len(diagnostics) == 5
    assert "non-numeric" in reasons
    assert "expected 3 fields, got 4" in reasons
    assert "non-finite" in reasons
    assert "empty machine_id" in reasons


def test_wrong_header(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text("id,strain,stress\nm00,0.01,4e8\n")
    with pytest.raises(ConfigError, match="header must be machine_id,strain,stress_pa"):
        read_points(path)


def test_empty_file(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text("")
    with pytest.raises(ConfigError, match="header row is mandatory"):
        read_points(path)


def test_unterminated_quote_is_a_diagnostic(tmp_path):
    path = tmp_path / "measurements.csv"
    path.write_text('machine_id,dl_al_m,dl_ac_m\nm00,1e-7,2e-6\n"m01,1e-7,2e-6\nm02,1e-7,2e-6\n')
    records, diagnostics = read_measurements(path)
    assert [r.machine_id for r in records] == ["m00", "m02"]
    assert len(diagnostics) == 1
    assert diagnostics[0].row == 2
    assert "quote character" in diagnostics[0].reason


def test_invalid_utf8(tmp_path):
    path = tmp_path / "points.csv"
    path.write_bytes(b"machine_id,strain,stress_pa\nm\xff00,0.01,4e8\n")
    with pytest.raises(ConfigError, match="not UTF-8"):
        read_points(path)


def test_invalid_point_is_a_diagnostic(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text("machine_id,strain,stress_pa\nm00,0.01,4e8\nm01,-0.2,1e8\n")
    points, diagnostics = read_points(path)
    assert [p.machine_id for p in points] == ["m00"]
    assert "displacement signs" in diagnostics[0].reason


def test_machines_round_trip(tmp_path, actuator, specimen):
    hardening = MaterialModel(70e9, HardeningLaw.POWER_LAW, 220e6, hardening_exponent=0.2)
    machines = [
        Machine("m00", actuator, specimen),
        Machine(
            "m01",
            actuator.with_length(2e-3),
            SpecimenSpec(specimen.beam, hardening, specimen.alpha_dt),
        ),
    ]
    path = write_machines(tmp_path / "machines.json", machines, "demo")
    assert path.read_text().endswith("}\n")
    assert read_machines(path) == machines


def test_machines_file_errors(tmp_path):
    path = tmp_path / "machines.json"
    path.write_text('{"machines": [{"id": "m00"}]}')
    with pytest.raises(ConfigError, match="malformed machine"):
        read_machines(path)
    with pytest.raises(ConfigError, match="Cannot read"):
        read_machines(tmp_path / "absent.json")


def test_unknown_hardening_law_in_machines_file(tmp_path, actuator, specimen):
    path = write_machines(tmp_path / "machines.json", [Machine("m00", actuator, specimen)], "demo")
    document = json.loads(path.read_text())
    document["machines"][0]["specimen"]["material"]["law"] = "bogus"
    path.write_text(json.dumps(document))
    with pytest.raises(ConfigError, match="Unknown hardening law 'bogus'"):
        read_machines(path)


def test_fit_report_round_trip(tmp_path):
    fit = FitResult(
        yield_strength=400e6,
        elastic_modulus_used=70e9,
        plastic_line=PlasticLine(12.5, 399999999.9),
        residual_rms=0.25,
        points_used=3,
        plastic_threshold=0.0085,
    )
    hardening = FitResult(
        yield_strength=401e6,
        elastic_modulus_used=70e9,
        plastic_line=PlasticLine(0.0, 4e8),
        residual_rms=0.0,
        points_used=3,
        model_fit=MaterialModel(70e9, HardeningLaw.POWER_LAW, 401e6, hardening_exponent=1e-6),
        method="power-law",
        plateau_like=True,
    )
    report = FitReport(
        campaign="al-250nm",
        label="Al 250 nm",
        thickness=250e-9,
        fit=fit,
        points=[StressStrainPoint("m09", 0.0095, 4e8)],
        hardening=hardening,
    )
    path = write_fit_report(tmp_path / "fit.json", report)
    assert read_fit_report(path) == report

    point = json.loads(path.read_text())["points"][0]
    assert point["engineering_strain"] == pytest.approx(math.expm1(0.0095), rel=1e-12)
