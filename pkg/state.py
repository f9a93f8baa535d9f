"""State definition for the census workflow.

This module defines the TypedDict state passed between the LangGraph nodes
of the census pipeline: ingest, validate, deduplicate, classify, tabulate.
"""

from typing import Any, Optional, TypedDict


class CensusState(TypedDict):
    """State schema for the census workflow.

    Attributes:
        input_text: Polytope file contents, or None to run the enumerator.
        input_format: Input format name (plain | json | grdb-matrix).
        transpose: Read grdb-matrix vertices as rows.
        enumerate_box: Coordinate box for the enumerator.
        max_vertices: Largest vertex count for the enumerator.
        index_filter: Keep only this Gorenstein index, if set.
        budget: Step budget per polytope.
        max_hull_vertices: Hull-size ceiling per step.
        dedup: Drop unimodular duplicates before classifying.
        smooth_only: Tabulate smooth polytopes only.
        workers: Number of classification processes.
        store_path: Results store to resume from and append to, if set.
        records: Parsed or enumerated input records.
        accepted: (id, FanoPolytope) pairs that passed validation.
        rejections: Inputs that failed validation.
        candidates: Deduplicated polytopes awaiting classification.
        duplicates: Number of inputs dropped as duplicates.
        results: One ResultRecord per candidate.
        reused: Number of results taken from the store.
        report: Final CensusReport.
        error: Optional error message if something went wrong.
        exit_status: Process exit status matching ``error``.
    """

    input_text: Optional[str]
    input_format: str
    transpose: bool
    enumerate_box: int
    max_vertices: int
    index_filter: Optional[int]
    budget: int
    max_hull_vertices: int
    dedup: bool
    smooth_only: bool
    workers: int
    store_path: Optional[str]
    records: list[Any]
    accepted: list[Any]
    rejections: list[Any]
    candidates: list[Any]
    duplicates: int
    results: list[Any]
    reused: int
    report: Optional[Any]
    error: Optional[str]
    exit_status: int
