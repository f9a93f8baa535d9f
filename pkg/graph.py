"""LangGraph workflow definition.

This module defines the census pipeline using LangGraph's StateGraph. Every
input passes through ingest, validate, deduplicate, classify and tabulate;
nodes that can fail route to END with an error instead of continuing.
"""

import logging
from typing import Any, Optional

from langgraph.graph import END, StateGraph

from config import (
    CENSUS_WORKERS,
    DEFAULT_BUDGET,
    DEFAULT_ENUMERATION_BOX,
    DEFAULT_ENUMERATION_MAX_VERTICES,
    DEFAULT_MAX_HULL_VERTICES,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    InputFormat,
)
from nodes.classify import classify_node
from nodes.deduplicate import deduplicate_node
from nodes.ingest import ingest_node
from nodes.router import route_on_error
from nodes.tabulate import tabulate_node
from nodes.validate import validate_node
from state import CensusState

logger = logging.getLogger(__name__)


def create_graph() -> StateGraph:
    """Create and configure the census workflow.

    This function builds the pipeline with the following structure:
    1. Ingest parses the input file or runs the enumerator
    2. Validate keeps Fano polytopes (and filters by index)
    3. Deduplicate keeps one polytope per canonical key
    4. Classify runs the engine, resuming from the results store
    5. Tabulate builds the census table

    Returns:
        Configured StateGraph instance ready for compilation.

    Example:
        >>> graph = create_graph()
        >>> app = graph.compile()
    """
    workflow = StateGraph(CensusState)

    workflow.add_node("ingest", ingest_node)
    workflow.add_node("validate", validate_node)
    workflow.add_node("deduplicate", deduplicate_node)
    workflow.add_node("classify", classify_node)
    workflow.add_node("tabulate", tabulate_node)

    workflow.set_entry_point("ingest")

    workflow.add_conditional_edges(
        "ingest",
        route_on_error,
        {"continue": "validate", "end": END},
    )
    workflow.add_edge("validate", "deduplicate")
    workflow.add_edge("deduplicate", "classify")
    workflow.add_conditional_edges(
        "classify",
        route_on_error,
        {"continue": "tabulate", "end": END},
    )
    workflow.add_edge("tabulate", END)

    logger.info("Graph created successfully")
    return workflow


def run_census(
    input_text: Optional[str] = None,
    input_format: InputFormat = InputFormat.PLAIN,
    transpose: bool = False,
    enumerate_box: int = DEFAULT_ENUMERATION_BOX,
    max_vertices: int = DEFAULT_ENUMERATION_MAX_VERTICES,
    index_filter: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
    max_hull_vertices: int = DEFAULT_MAX_HULL_VERTICES,
    dedup: bool = True,
    smooth_only: bool = False,
    workers: int = CENSUS_WORKERS,
    store_path: Optional[str] = None,
) -> dict[str, Any]:
    """Run a census through the workflow.

    Args:
        input_text: Polytope file contents; None runs the enumerator instead.
        input_format: Format of ``input_text``.
        transpose: Read grdb-matrix vertices as rows.
        enumerate_box: Enumerator coordinate box.
        max_vertices: Enumerator vertex limit.
        index_filter: Keep only this Gorenstein index.
        budget: Step budget per polytope.
        max_hull_vertices: Hull-size ceiling per step.
        dedup: Drop unimodular duplicates.
        smooth_only: Tabulate smooth polytopes only.
        workers: Classification processes.
        store_path: Results store to resume from and append to.

    Returns:
        Final state dictionary; ``report`` holds the CensusReport, ``error``
        and ``exit_status`` describe a failure.

    Example:
        >>> result = run_census(index_filter=1)
        >>> print(result["report"].table)
    """
    logger.info(f"Running census (index={index_filter}, budget={budget})")

    workflow = create_graph()
    app = workflow.compile()

    initial_state: CensusState = {
        "input_text": input_text,
        "input_format": InputFormat(input_format).value,
        "transpose": transpose,
        "enumerate_box": enumerate_box,
        "max_vertices": max_vertices,
        "index_filter": index_filter,
        "budget": budget,
        "max_hull_vertices": max_hull_vertices,
        "dedup": dedup,
        "smooth_only": smooth_only,
        "workers": workers,
        "store_path": store_path,
        "records": [],
        "accepted": [],
        "rejections": [],
        "candidates": [],
        "duplicates": 0,
        "results": [],
        "reused": 0,
        "report": None,
        "error": None,
        "exit_status": EXIT_OK,
    }

    try:
        final_state = app.invoke(initial_state)
        logger.info("Census completed")
        return final_state
    except Exception as e:
        logger.error(f"Error running census: {e}", exc_info=True)
        return {**initial_state, "error": str(e), "exit_status": EXIT_INPUT_ERROR}
