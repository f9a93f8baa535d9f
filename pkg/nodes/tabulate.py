"""Tabulate node: group results into the census table."""

import logging
from typing import Any

from config import DEFAULT_BUDGET
from classification.census import CensusReport, tabulate
from state import CensusState

logger = logging.getLogger(__name__)


def tabulate_node(state: CensusState) -> dict[str, Any]:
    """Count verdicts per (dimension, Gorenstein index) group.

    Args:
        state: Census state with ``results``, ``rejections`` and ``duplicates``.

    Returns:
        State update with the final ``report``; its strict-type columns run
        from ``B0`` to ``B{budget-1}``.
    """
    rejections = state["rejections"]
    table = tabulate(
        state["results"],
        rejections,
        state.get("smooth_only", False),
        state.get("budget", DEFAULT_BUDGET),
    )
    report = CensusReport(
        table=table,
        results=state["results"],
        rejected={r.id: r.reason for r in rejections},
        duplicates=state["duplicates"],
    )
    logger.info(f"Census table has {len(report.table)} rows")
    return {"report": report}
