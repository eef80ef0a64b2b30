"""Tests for environment-driven settings."""

import pytest
from pydantic import ValidationError

from config import Settings


def test_defaults(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    settings = Settings()
    assert settings.log_level == "INFO"
    assert settings.log_file is None
    assert settings.solver_max_iterations == 200
    assert settings.solver_workers == 1
    assert settings.design_rel_tol == 1e-4
    assert settings.get_logs_dir() is None


def test_environment_overrides(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("MTM_LOG_LEVEL", "debug")
    monkeypatch.setenv("MTM_SOLVER_WORKERS", "4")
    monkeypatch.setenv("MTM_LOG_FILE", str(tmp_path / "logs" / "run.log"))
    settings = Settings()
    assert settings.log_level == "DEBUG"
    assert settings.solver_workers == 4
    assert settings.get_logs_dir() == tmp_path / "logs"


def test_dotenv_file(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / ".env").write_text("MTM_SOLVER_MAX_ITERATIONS=50\n")
    assert Settings().solver_max_iterations == 50


@pytest.mark.parametrize(
    "name, value",
    [
        ("MTM_LOG_LEVEL", "CHATTY"),
        ("MTM_SOLVER_WORKERS", "0"),
        ("MTM_DESIGN_REL_TOL", "1.5"),
    ],
)
def test_invalid_values(tmp_path, monkeypatch, name, value):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv(name, value)
    with pytest.raises(ValidationError):
        Settings()
