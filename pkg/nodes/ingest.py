"""Ingest node: parse the input file or run the enumerator."""

import logging
from typing import Any

from config import EXIT_INPUT_ERROR, InputFormat
from errors import ParseError
from data.enumerator import enumerate_fano_polygons
from data.formats import parse
from state import CensusState

logger = logging.getLogger(__name__)


def ingest_node(state: CensusState) -> dict[str, Any]:
    """Produce the input records of the census.

    Args:
        state: Census state with either ``input_text`` or enumerator settings.

    Returns:
        State update with ``records``, or ``error`` on malformed input.
    """
    try:
        if state.get("input_text") is None:
            records = list(
                enumerate_fano_polygons(
                    state["enumerate_box"], state["max_vertices"], state.get("index_filter")
                )
            )
        else:
            records = parse(
                state["input_text"],
                InputFormat(state["input_format"]),
                transpose=state.get("transpose", False),
            )
        logger.info(f"Ingested {len(records)} records")
        return {"records": records, "error": None}

    except (ParseError, ValueError) as e:
        logger.error(f"Error in ingest node: {e}")
        return {"records": [], "error": str(e), "exit_status": EXIT_INPUT_ERROR}
