"""Angle parsing, angle arithmetic and settings loading."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.shared_kernel import (
    ConfigurationError,
    GraphValidationError,
    ParameterRangeError,
    angle_distance,
    angles_close,
    ccw_angle,
    format_angle,
    get_settings,
    load_settings,
    parse_angle,
    require_positive,
    signed_angle,
    use_config,
    wrap_angle,
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("pi", math.pi),
        ("pi/2", math.pi / 2),
        ("-3*pi/4", -3 * math.pi / 4),
        ("2pi", 2 * math.pi),
        ("2*pi/3", 2 * math.pi / 3),
        ("1.5", 1.5),
        (0.25, 0.25),
        (2, 2.0),
    ],
)
def test_parse_angle(text, expected):
    assert parse_angle(text) == pytest.approx(expected, abs=1e-15)


def test_parse_angle_equal_fractions_are_identical():
    assert parse_angle("2*pi/4") == parse_angle("pi/2")


@pytest.mark.parametrize("bad", ["pi/0", "half a turn", True, None, float("nan")])
def test_parse_angle_rejects(bad):
    with pytest.raises(GraphValidationError):
        parse_angle(bad)


@given(st.floats(min_value=-1e4, max_value=1e4, allow_nan=False))
def test_wrap_angle_range(angle):
    wrapped = wrap_angle(angle)
    assert 0.0 <= wrapped < 2 * math.pi
    assert angles_close(wrapped, angle, 1e-7)


@given(st.floats(min_value=-1e3, max_value=1e3, allow_nan=False))
def test_signed_angle_range(angle):
    value = signed_angle(angle)
    assert -math.pi < value <= math.pi + 1e-12


def test_angle_distance_is_symmetric_and_wraps():
    assert angle_distance(0.1, 2 * math.pi - 0.1) == pytest.approx(0.2)
    assert angle_distance(2 * math.pi - 0.1, 0.1) == pytest.approx(0.2)
    assert angle_distance(0.0, math.pi) == pytest.approx(math.pi)


def test_ccw_angle():
    assert ccw_angle(0.0, math.pi / 2) == pytest.approx(math.pi / 2)
    assert ccw_angle(math.pi / 2, 0.0) == pytest.approx(3 * math.pi / 2)
    assert ccw_angle(1.0, 1.0) == 0.0


@pytest.mark.parametrize(
    "angle, text",
    [(math.pi, "pi"), (math.pi / 2, "pi/2"), (-math.pi / 3, "-pi/3"), (2 * math.pi / 3, "2*pi/3"), (0.0, "0")],
)
def test_format_angle(angle, text):
    assert format_angle(angle) == text
    assert parse_angle(format_angle(angle)) == pytest.approx(angle)


def test_format_angle_falls_back_to_radians():
    assert float(format_angle(0.123)) == 0.123


def test_require_positive():
    assert require_positive(2.0, "x") == 2.0
    for bad in (0.0, -1.0, float("inf"), float("nan")):
        with pytest.raises(ParameterRangeError):
            require_positive(bad, "x")


def test_default_settings():
    settings = get_settings()
    assert settings.solver.samples == 64
    assert settings.solver.restarts == 4
    assert settings.tolerances.angle == pytest.approx(1e-9)
    assert get_settings() is settings


def test_yaml_overrides_defaults(tmp_path):
    path = tmp_path / "solver.yaml"
    path.write_text("solver:\n  samples: 32\n  seed: 7\nrender:\n  scale: 50\n", encoding="utf-8")
    settings = use_config(path)
    assert settings.solver.samples == 32
    assert settings.solver.seed == 7
    assert settings.render.scale == 50
    assert settings.solver.restarts == 4
    assert get_settings() is settings


def test_environment_overrides_yaml(tmp_path, monkeypatch):
    path = tmp_path / "solver.yaml"
    path.write_text("solver:\n  samples: 32\n", encoding="utf-8")
    monkeypatch.setenv("ELASTINET_SOLVER__SAMPLES", "48")
    assert load_settings(path).solver.samples == 48


def test_missing_file_gives_defaults(tmp_path):
    assert load_settings(tmp_path / "absent.yaml").solver.samples == 64


@pytest.mark.parametrize(
    "content",
    ["solver: [unclosed", "- just\n- a list\n", "solver:\n  samples: 2\n", "tolerances:\n  angle: -1\n"],
)
def test_invalid_config(tmp_path, content):
    path = tmp_path / "solver.yaml"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ConfigurationError):
        load_settings(path)
