"""Classify node: run the engine on every candidate, resuming from the store."""

import logging
from typing import Any

from config import EXIT_RESOURCE_ERROR
from errors import StoreError
from classification.census import classify_candidates
from data.store import ResultsStore
from state import CensusState

logger = logging.getLogger(__name__)


def classify_node(state: CensusState) -> dict[str, Any]:
    """Classify candidates not already in the results store.

    Stored results of the current engine version are reused under the
    candidate's own id; new results are appended to the store.

    Args:
        state: Census state with ``candidates``.

    Returns:
        State update with ``results`` in candidate order and ``reused``, or
        ``error`` when the store cannot be used.
    """
    candidates = state["candidates"]
    try:
        store = ResultsStore.from_env(state["store_path"]) if state.get("store_path") else None

        stored = {}
        if store is not None:
            for c in candidates:
                record = store.reusable(c.key.hex())
                if record is not None:
                    stored[c.key] = record.model_copy(update={"id": c.id})
        pending = [c for c in candidates if c.key not in stored]
        logger.info(f"Classifying {len(pending)} polytopes, reusing {len(stored)} stored results")

        fresh = classify_candidates(
            pending, state["budget"], state["max_hull_vertices"], state.get("workers", 1)
        )
        if store is not None:
            store.extend(fresh)

        by_key = dict(stored)
        by_key.update({c.key: r for c, r in zip(pending, fresh)})
        return {
            "results": [by_key[c.key] for c in candidates],
            "reused": len(stored),
            "error": None,
        }

    except StoreError as e:
        logger.error(f"Error in classify node: {e}")
        return {"results": [], "reused": 0, "error": str(e), "exit_status": EXIT_RESOURCE_ERROR}
