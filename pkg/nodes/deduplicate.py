"""Deduplicate node: one representative per unimodular equivalence class."""

import logging
from typing import Any

from classification.census import deduplicate
from state import CensusState

logger = logging.getLogger(__name__)


def deduplicate_node(state: CensusState) -> dict[str, Any]:
    """Key every accepted polytope and drop later copies of a class.

    Args:
        state: Census state with ``accepted`` and the ``dedup`` option.

    Returns:
        State update with ``candidates`` in input order and the number of
        ``duplicates`` dropped; with ``dedup`` off every input is kept.
    """
    candidates, duplicates = deduplicate(state["accepted"], state.get("dedup", True))
    return {"candidates": candidates, "duplicates": duplicates}
