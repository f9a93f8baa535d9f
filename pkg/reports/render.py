"""Render analysis, classification and census results as text."""

import logging
from fractions import Fraction
from typing import Optional, Sequence

from config import OutputFormat
from geometry.lattice import Number, Vector
from geometry.polytope import VPolytope, centroid, dual
from analysis.fano import (
    FanoPolytope,
    cond_b1,
    g_values,
    gorenstein_index,
    has_zero_barycenter,
    is_kahler_einstein,
    is_smooth,
    orders,
)
from analysis.symmetry import automorphisms, has_nontrivial_rotation, is_symmetric
from classification.census import CensusReport
from classification.engine import OrbitClasses, Trajectory, TypeVerdict
from reports.templates import (
    ANALYSIS_TEMPLATE,
    CENSUS_FOOTER_TEMPLATE,
    CLASSIFY_HEADER_TEMPLATE,
    ORBIT_TEMPLATE,
    PLANE_ANALYSIS_TEMPLATE,
    TERMINAL_TEMPLATE,
    TRAJECTORY_HEADER,
    TRAJECTORY_LINE_TEMPLATE,
    TRANSFORM_LINE_TEMPLATE,
)

logger = logging.getLogger(__name__)


def format_number(x: Number) -> str:
    return str(Fraction(x))


def format_vector(v: Sequence[Number]) -> str:
    return "(" + ",".join(format_number(x) for x in v) + ")"


def format_vectors(vectors: Sequence[Sequence[Number]]) -> str:
    return ";".join(format_vector(v) for v in vectors)


def format_polytope(P: VPolytope | FanoPolytope) -> str:
    """Vertices in the plain input format, so output can be fed back in."""
    return format_vectors(P.vertices)


def render_analysis(name: str, P: FanoPolytope) -> str:
    """All predicates and invariants of one Fano polytope."""
    dual_barycenter: Vector = centroid(dual(P.polytope))
    text = ANALYSIS_TEMPLATE.format(
        name=name,
        dimension=P.dim,
        vertex_count=len(P),
        vertices=format_polytope(P),
        facet_count=len(P.facets),
        index=gorenstein_index(P),
        smooth=is_smooth(P),
        symmetric=is_symmetric(P),
        automorphisms=automorphisms(P).order,
        kahler_einstein=is_kahler_einstein(P),
        barycenter="zero" if has_zero_barycenter(P) else format_vector(centroid(P.polytope)),
        dual_barycenter=format_vector(dual_barycenter),
    )
    if P.dim == 2:
        text += PLANE_ANALYSIS_TEMPLATE.format(
            orders=" ".join(format_number(x) for x in orders(P)),
            g_values=" ".join(format_number(x) for x in g_values(P)),
            cond_b1=cond_b1(P),
            rotation=has_nontrivial_rotation(P),
        )
    return text


def render_transform(iterates: Sequence[VPolytope], failure: Optional[str] = None) -> str:
    """One line per iterate; ``failure`` annotates the last one."""
    lines = []
    for step, P in enumerate(iterates):
        note = ""
        if step == len(iterates) - 1 and failure:
            note = f"  [{failure}]"
        elif not P.is_full_dimensional:
            note = f"  [dimension {P.affine_dim}]"
        lines.append(TRANSFORM_LINE_TEMPLATE.format(step=step, polytope=format_polytope(P), note=note))
    return "".join(lines)


def render_classification(
    name: str,
    verdict: TypeVerdict,
    trajectory: Trajectory,
    exact: Optional[tuple[int, int]] = None,
) -> str:
    """Verdict followed by the trajectory table."""
    text = CLASSIFY_HEADER_TEMPLATE.format(
        name=name,
        verdict=str(verdict),
        exact_period="none" if exact is None else f"t={exact[0]}, k={exact[1]}",
    )
    text += TRAJECTORY_HEADER
    for s in trajectory.steps:
        flags = s.flags
        text += TRAJECTORY_LINE_TEMPLATE.format(
            step=s.step,
            vertex_count=s.vertex_count,
            kahler_einstein=str(flags.kahler_einstein) if flags else "-",
            symmetric=str(flags.symmetric) if flags else "-",
            smooth=str(flags.smooth) if flags else "-",
            polytope=format_polytope(s.polytope),
        )
    if trajectory.terminal is not None:
        text += TERMINAL_TEMPLATE.format(polytope=format_polytope(trajectory.terminal))
    return text


def render_orbit(name: str, orbit: OrbitClasses) -> str:
    text = ORBIT_TEMPLATE.format(
        name=name,
        count=len(orbit),
        incomplete="" if orbit.complete else " (incomplete: trajectory not proven periodic)",
    )
    return text + "".join(f"  {key.hex()}\n" for key in sorted(orbit.keys))


def render_census(report: CensusReport, fmt: OutputFormat = OutputFormat.TEXT, reused: int = 0) -> str:
    """Census table as aligned text, CSV or JSON records."""
    fmt = OutputFormat(fmt)
    table = report.table
    if fmt == OutputFormat.CSV:
        return table.to_csv(index=False)
    if fmt == OutputFormat.JSON:
        return table.to_json(orient="records") + "\n"
    body = table.to_string(index=False) if not table.empty else "(no polytopes)"
    return body + "\n" + CENSUS_FOOTER_TEMPLATE.format(
        rejected=len(report.rejected),
        duplicates=report.duplicates,
        reused=reused,
    )
