"""Tests for the thickness comparison table."""

import pytest

from analysis import BULK_ALUMINIUM_YIELD, FitResult, PlasticLine, compare_thicknesses
from utils.errors import InsufficientDataError


def fit_at(yield_strength):
    return FitResult(
        yield_strength=yield_strength,
        elastic_modulus_used=70e9,
        plastic_line=PlasticLine(0.0, yield_strength),
        residual_rms=0.0,
        points_used=4,
    )


def test_thinner_film_is_stronger():
    comparison = compare_thicknesses({500e-9: fit_at(220e6), 250e-9: fit_at(400e6)})
    assert [r.thickness for r in comparison.rows] == [250e-9, 500e-9]
    assert comparison.monotone_decreasing
    assert comparison.strength_ratio == pytest.approx(400 / 220)
    assert round(comparison.strength_ratio, 2) == 1.82
    assert comparison.rows[1].ratio_to_thickest == 1.0


def test_equal_yields_show_no_size_effect():
    comparison = compare_thicknesses({250e-9: fit_at(300e6), 500e-9: fit_at(300e6)})
    assert not comparison.monotone_decreasing


def test_single_fit_is_rejected():
    with pytest.raises(InsufficientDataError):
        compare_thicknesses({250e-9: fit_at(400e6)})


def test_bulk_reference_column():
    comparison = compare_thicknesses(
        {250e-9: fit_at(400e6), 500e-9: fit_at(220e6)}, bulk_yield_strength=BULK_ALUMINIUM_YIELD
    )
    frame = comparison.to_frame()
    assert list(frame.columns) == [
        "thickness_m",
        "yield_strength_pa",
        "ratio_to_thickest",
        "ratio_to_bulk",
    ]
    assert frame["ratio_to_bulk"].iloc[0] == pytest.approx(400 / 70)


def test_render_has_flag_lines():
    text = compare_thicknesses({250e-9: fit_at(400e6), 500e-9: fit_at(220e6)}).render()
    assert "monotone_decreasing: true" in text
    assert "strength_ratio (thinnest/thickest): 1.818" in text
    assert "ratio_to_bulk" not in text
