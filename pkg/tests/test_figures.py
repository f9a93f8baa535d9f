import pytest

from errors import UnsupportedDimensionError
from analysis.families import fano, named_fixture
from classification.engine import classify
from reports.figures import trajectory_svg, write_trajectory_svg


def test_svg_is_deterministic():
    verdict, trajectory = classify(named_fixture("to-ke"), with_flags=False)
    first = trajectory_svg(trajectory, verdict)
    second = trajectory_svg(trajectory, verdict)
    assert first == second
    assert first.startswith("<?xml")
    assert "<svg" in first


def test_terminal_panel_is_drawn():
    verdict, trajectory = classify(named_fixture("strict-b1"), with_flags=False)
    assert trajectory.terminal is not None
    assert len(trajectory.steps) == 2
    svg = trajectory_svg(trajectory, verdict)
    assert 'id="axes_3"' in svg
    assert 'id="axes_4"' not in svg


def test_three_dimensional_trajectory_is_rejected():
    octahedron = fano([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
    _, trajectory = classify(octahedron, budget=1, with_flags=False)
    with pytest.raises(UnsupportedDimensionError):
        trajectory_svg(trajectory)


def test_write_trajectory_svg(tmp_path):
    verdict, trajectory = classify(named_fixture("square"), with_flags=False)
    path = write_trajectory_svg(tmp_path / "square.svg", trajectory, verdict)
    assert path.read_text(encoding="utf-8") == trajectory_svg(trajectory, verdict)
