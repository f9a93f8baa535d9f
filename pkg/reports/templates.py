"""Text templates for command-line reports.

This module contains the layouts of every report printed by the CLI. Reports
go to stdout and must be byte-identical across runs.
"""

from typing import Final


# Single polytope
ANALYSIS_TEMPLATE: Final[str] = """Polytope: {name}
Dimension: {dimension}
Vertices ({vertex_count}): {vertices}
Facets: {facet_count}
Gorenstein index: {index}
Smooth: {smooth}
Symmetric: {symmetric}
Automorphisms: {automorphisms}
Kahler-Einstein: {kahler_einstein}
Barycenter: {barycenter}
Dual barycenter: {dual_barycenter}
"""

PLANE_ANALYSIS_TEMPLATE: Final[str] = """Orders: {orders}
g values: {g_values}
Sufficient B1 condition: {cond_b1}
Nontrivial rotation: {rotation}
"""


# Iteration
TRANSFORM_LINE_TEMPLATE: Final[str] = "B^{step}: {polytope}{note}\n"

CLASSIFY_HEADER_TEMPLATE: Final[str] = """Polytope: {name}
Verdict: {verdict}
Exact period: {exact_period}
"""

TRAJECTORY_HEADER: Final[str] = "step  vertices  KE     symmetric  smooth  polytope\n"

TRAJECTORY_LINE_TEMPLATE: Final[str] = (
    "{step:>4}  {vertex_count:>8}  {kahler_einstein:<5}  {symmetric:<9}  {smooth:<6}  {polytope}\n"
)

TERMINAL_TEMPLATE: Final[str] = "first non-Fano iterate: {polytope}\n"

ORBIT_TEMPLATE: Final[str] = """Polytope: {name}
Orbit classes: {count}{incomplete}
"""


# Census
CENSUS_FOOTER_TEMPLATE: Final[str] = """
Inputs rejected: {rejected}
Duplicates dropped: {duplicates}
Results reused from store: {reused}
"""
