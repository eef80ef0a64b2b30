#!/usr/bin/env python3
"""
Test runner for the micro-tensile machine toolkit.

Wraps pytest, flake8, mypy and black with the options used in CI.
Acceptance tests marked ``slow`` are skipped unless ``--slow`` is given.
"""

import argparse
import os
import platform
import subprocess
import sys
from pathlib import Path
from typing import List, Optional

COMPONENTS = [
    "constitutive",
    "machine_model",
    "reduction",
    "analysis",
    "config",
    "io_cli",
    "utils",
]


def run_command(command: List[str], description: str) -> bool:
    """Run a command and return success status."""
    print(f"🔄 {description}...")
    try:
        subprocess.run(command, check=True)
        print(f"✅ {description} completed successfully")
        return True
    except subprocess.CalledProcessError as e:
        print(f"❌ {description} failed with exit code {e.returncode}")
        return False
    except FileNotFoundError:
        print(f"❌ Command not found: {' '.join(command)}")
        return False


def get_python_path() -> str:
    """Python of the project virtual environment, or the current interpreter."""
    venv_python = "venv\\Scripts\\python" if platform.system().lower() == "windows" else "venv/bin/python"
    return venv_python if Path(venv_python).exists() else sys.executable


def pytest_command(paths: List[str], verbose: bool, slow: bool) -> List[str]:
    command = [get_python_path(), "-m", "pytest", *paths]
    if verbose:
        command.append("-v")
    if not slow:
        command.extend(["-m", "not slow"])
    return command


def run_unit_tests(component: Optional[str] = None, verbose: bool = False) -> bool:
    """Run unit tests, optionally for one package."""
    if component:
        path, description = f"tests/unit/{component}/", f"Running unit tests for {component}"
    else:
        path, description = "tests/unit/", "Running all unit tests"
    return run_command(pytest_command([path], verbose, slow=True), description)


def run_integration_tests(verbose: bool = False, slow: bool = False) -> bool:
    """Run CLI integration tests and, with ``slow``, the acceptance runs."""
    description = "Running integration and acceptance tests" if slow else "Running integration tests"
    return run_command(pytest_command(["tests/integration/"], verbose, slow), description)


def run_coverage_tests(slow: bool = False) -> bool:
    """Run tests with coverage reporting."""
    command = pytest_command(["tests/"], verbose=False, slow=slow)
    command.extend(
        ["--cov=src", "--cov-report=html", "--cov-report=term-missing", "--cov-fail-under=85"]
    )
    success = run_command(command, "Running tests with coverage")
    if success:
        print("📊 Coverage report generated in htmlcov/index.html")
    return success


def run_linting() -> bool:
    """Run flake8 and mypy."""
    python_path = get_python_path()
    flake8_success = run_command(
        [python_path, "-m", "flake8", "--max-line-length=100", "src/", "tests/"],
        "Running flake8 linting",
    )
    mypy_success = run_command(
        [python_path, "-m", "mypy", "--ignore-missing-imports", "src/"],
        "Running mypy type checking",
    )
    return flake8_success and mypy_success


def run_formatting_check() -> bool:
    return run_command(
        [get_python_path(), "-m", "black", "--check", "--diff", "-l", "100", "src/", "tests/"],
        "Checking code formatting",
    )


def format_code() -> bool:
    return run_command(
        [get_python_path(), "-m", "black", "-l", "100", "src/", "tests/"],
        "Formatting code",
    )


def run_all_checks(slow: bool = False) -> bool:
    """Run all quality checks."""
    checks = [
        ("Linting", run_linting),
        ("Formatting check", run_formatting_check),
        ("Unit tests", lambda: run_unit_tests(verbose=True)),
        ("Integration tests", lambda: run_integration_tests(verbose=True, slow=slow)),
        ("Coverage tests", lambda: run_coverage_tests(slow=slow)),
    ]

    failed_checks = []
    for check_name, check_function in checks:
        print(f"\n{'=' * 20} {check_name} {'=' * 20}")
        if not check_function():
            failed_checks.append(check_name)

    print(f"\n{'=' * 50}")
    if failed_checks:
        print("❌ Some checks failed:")
        for check in failed_checks:
            print(f"   - {check}")
        return False
    print("✅ All checks passed!")
    return True


def main() -> int:
    parser = argparse.ArgumentParser(description="Run tests and quality checks for microtensile")
    parser.add_argument("--component", choices=COMPONENTS, help="Run unit tests for one package only")
    parser.add_argument(
        "--type",
        choices=["unit", "integration", "coverage", "lint", "format", "format-check", "all"],
        default="unit",
        help="Type of tests/checks to run",
    )
    parser.add_argument("--slow", action="store_true", help="Include slow acceptance tests")
    parser.add_argument("--verbose", "-v", action="store_true", help="Verbose output")
    args = parser.parse_args()

    project_root = Path(__file__).parent.parent
    os.chdir(project_root)

    print(f"🧪 Running {args.type} tests/checks...")
    print(f"📁 Working directory: {project_root.absolute()}")

    if args.type == "unit":
        success = run_unit_tests(args.component, args.verbose)
    elif args.type == "integration":
        success = run_integration_tests(args.verbose, args.slow)
    elif args.type == "coverage":
        success = run_coverage_tests(args.slow)
    elif args.type == "lint":
        success = run_linting()
    elif args.type == "format":
        success = format_code()
    elif args.type == "format-check":
        success = run_formatting_check()
    else:
        success = run_all_checks(args.slow)

    if success:
        print("\n🎉 All tests/checks completed successfully!")
        return 0
    print("\n💥 Some tests/checks failed!")
    return 1


if __name__ == "__main__":
    sys.exit(main())
