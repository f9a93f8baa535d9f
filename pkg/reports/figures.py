"""SVG strips of planar B-transformation trajectories.

Output is deterministic: fixed hash salt, no date metadata.
"""

import io
import logging
from pathlib import Path
from typing import Optional, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Polygon  # noqa: E402

from config import ERROR_PLANAR_ONLY, SVG_HASH_SALT, SVG_PANEL_SIZE  # noqa: E402
from errors import UnsupportedDimensionError  # noqa: E402
from geometry.polytope import VPolytope  # noqa: E402
from classification.engine import Trajectory, TypeVerdict  # noqa: E402

logger = logging.getLogger(__name__)

_FANO_COLOR = "#2c5282"
_TERMINAL_COLOR = "#c53030"


def _draw_panel(ax, P: VPolytope, title: str, color: str, dashed: bool = False) -> None:
    points = [tuple(float(x) for x in v) for v in P.vertices]
    if len(points) >= 3:
        ax.add_patch(
            Polygon(points, closed=True, fill=False, edgecolor=color, linestyle="--" if dashed else "-")
        )
    elif len(points) == 2:
        ax.plot(*zip(*points), color=color, linestyle="--" if dashed else "-")
    ax.scatter(*zip(*points), s=8, color=color, zorder=3)
    ax.scatter([0.0], [0.0], s=10, marker="+", color="black", zorder=4)

    xs = [p[0] for p in points] + [0.0]
    ys = [p[1] for p in points] + [0.0]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1.0)
    cx = (max(xs) + min(xs)) / 2
    cy = (max(ys) + min(ys)) / 2
    half = span / 2 * 1.15
    ax.set_xlim(cx - half, cx + half)
    ax.set_ylim(cy - half, cy + half)
    ax.set_aspect("equal")
    ax.set_title(title, fontsize=8)
    ax.tick_params(labelsize=6)
    ax.grid(True, ls=":", alpha=0.4)


def trajectory_svg(trajectory: Trajectory, verdict: Optional[TypeVerdict] = None) -> str:
    """Draw every iterate of a planar trajectory side by side.

    The first non-Fano iterate, if any, is drawn dashed in a last panel.

    Raises:
        UnsupportedDimensionError: If the trajectory is not planar.
    """
    panels: list[tuple[VPolytope, str, str, bool]] = [
        (s.polytope.polytope, f"B^{s.step}", _FANO_COLOR, False) for s in trajectory.steps
    ]
    if trajectory.terminal is not None:
        panels.append((trajectory.terminal, f"B^{len(trajectory.steps)} (not Fano)", _TERMINAL_COLOR, True))
    if any(P.ambient_dim != 2 for P, *_ in panels):
        raise UnsupportedDimensionError(ERROR_PLANAR_ONLY)

    with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT}):
        fig, axes = plt.subplots(
            1, len(panels), figsize=(SVG_PANEL_SIZE * len(panels), SVG_PANEL_SIZE + 0.4), squeeze=False
        )
        for ax, (P, title, color, dashed) in zip(axes[0], panels):
            _draw_panel(ax, P, title, color, dashed)
        if verdict is not None:
            fig.suptitle(str(verdict), fontsize=9)
        fig.tight_layout()

        buffer = io.BytesIO()
        fig.savefig(buffer, format="svg", metadata={"Date": None})
        plt.close(fig)

    logger.info(f"Rendered trajectory strip with {len(panels)} panels")
    return buffer.getvalue().decode("utf-8")


def write_trajectory_svg(
    path: Union[str, Path], trajectory: Trajectory, verdict: Optional[TypeVerdict] = None
) -> Path:
    """Write :func:`trajectory_svg` output to ``path``."""
    path = Path(path)
    path.write_text(trajectory_svg(trajectory, verdict), encoding="utf-8")
    return path
