"""Validate node: keep Fano inputs, record the rest as rejections."""

import logging
from typing import Any

from classification.census import filter_by_index, validate_records
from state import CensusState

logger = logging.getLogger(__name__)


def validate_node(state: CensusState) -> dict[str, Any]:
    """Check the Fano conditions on every ingested record.

    Args:
        state: Census state with ``records`` and an optional ``index_filter``.

    Returns:
        State update with ``accepted`` (id, FanoPolytope) pairs, restricted to
        one Gorenstein index when ``index_filter`` is set, and ``rejections``.
    """
    accepted, rejections = validate_records(state["records"])
    if state.get("index_filter") is not None:
        accepted = filter_by_index(accepted, state["index_filter"])
        logger.info(f"{len(accepted)} polytopes of index {state['index_filter']}")
    return {"accepted": accepted, "rejections": rejections}
