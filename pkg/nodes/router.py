"""Routing functions for the census workflow's conditional edges."""

import logging

from state import CensusState

logger = logging.getLogger(__name__)


def route_on_error(state: CensusState) -> str:
    """Continue the pipeline, or stop when a node reported an error.

    Args:
        state: Current census state.

    Returns:
        ``"continue"`` or ``"end"``.

    Example:
        >>> route_on_error({"error": None})
        'continue'
    """
    if state.get("error"):
        logger.warning(f"Stopping census: {state['error']}")
        return "end"
    return "continue"
