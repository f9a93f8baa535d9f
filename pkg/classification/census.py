"""Batch classification and census tables.

A census validates every input, drops unimodular duplicates, classifies the
survivors (optionally across worker processes) and counts verdicts per
(dimension, Gorenstein index) group with pandas.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable, Optional

import pandas as pd

from config import DEFAULT_BUDGET, DEFAULT_MAX_HULL_VERTICES, FailureReason
from errors import BarycentricError
from analysis.fano import FanoPolytope, gorenstein_index, is_kahler_einstein, is_smooth, validate_fano
from analysis.symmetry import is_symmetric
from classification.canonical import CanonicalKey, canonical_key
from classification.engine import (
    PeriodicBInfinity,
    StrictType,
    Trajectory,
    TypeVerdict,
    classify,
)
from data.records import PolytopeRecord, ResultRecord, TrajectorySummary, VerdictSummary

logger = logging.getLogger(__name__)

GROUP_COLUMNS = ["dimension", "gorenstein_index"]


@dataclass(frozen=True)
class Rejection:
    """An input that is not a Fano polytope, or could not be read as one."""

    id: str
    dimension: int
    reason: str


@dataclass(frozen=True)
class Candidate:
    """A validated input awaiting classification."""

    id: str
    polytope: FanoPolytope
    key: CanonicalKey


@dataclass
class CensusReport:
    """Census outcome.

    Attributes:
        table: One row per group with verdict counts, ``total``, ``KE`` and
            the number of rejected inputs of that dimension.
        results: The result record of every classified polytope.
        rejected: Input id mapped to the reason it was rejected.
        duplicates: Number of inputs dropped as equivalent to an earlier one.
    """

    table: pd.DataFrame
    results: list[ResultRecord] = field(default_factory=list)
    rejected: dict[str, str] = field(default_factory=dict)
    duplicates: int = 0


def summarize_verdict(verdict: TypeVerdict) -> VerdictSummary:
    if isinstance(verdict, StrictType):
        return VerdictSummary(kind=verdict.kind, k=verdict.k, reason=verdict.reason)
    if isinstance(verdict, PeriodicBInfinity):
        return VerdictSummary(kind=verdict.kind, preperiod=verdict.preperiod, period=verdict.period)
    return VerdictSummary(kind=verdict.kind, budget=verdict.budget, resource_abort=verdict.resource_abort)


def summarize_trajectory(trajectory: Trajectory) -> TrajectorySummary:
    terminal = None
    if trajectory.terminal is not None:
        terminal = [tuple(int(x) for x in v) for v in trajectory.terminal.vertices]
    return TrajectorySummary(
        vertex_counts=trajectory.vertex_counts,
        keys=[k.hex() for k in trajectory.keys],
        kahler_einstein=[is_kahler_einstein(s.polytope) for s in trajectory.steps],
        terminal_vertices=terminal,
    )


def result_record(
    record_id: str,
    P: FanoPolytope,
    budget: int = DEFAULT_BUDGET,
    max_hull_vertices: int = DEFAULT_MAX_HULL_VERTICES,
) -> ResultRecord:
    """Classify one polytope and collect its invariants into a record."""
    verdict, trajectory = classify(P, budget, max_hull_vertices, with_flags=False)
    return ResultRecord(
        id=record_id,
        canonical_key=trajectory.keys[0].hex(),
        dimension=P.dim,
        vertex_count=len(P),
        gorenstein_index=gorenstein_index(P),
        smooth=is_smooth(P),
        symmetric=is_symmetric(P),
        kahler_einstein=is_kahler_einstein(P),
        verdict=summarize_verdict(verdict),
        trajectory=summarize_trajectory(trajectory),
    )


def validate_records(
    records: Iterable[PolytopeRecord],
) -> tuple[list[tuple[str, FanoPolytope]], list[Rejection]]:
    """Split input records into Fano polytopes and rejections."""
    accepted: list[tuple[str, FanoPolytope]] = []
    rejected: list[Rejection] = []
    for record in records:
        try:
            result = validate_fano(record.vertices)
        except BarycentricError as e:
            logger.warning(f"Rejected {record.id}: {e}")
            rejected.append(Rejection(record.id, record.dimension, str(e)))
            continue
        if isinstance(result, FailureReason):
            logger.debug(f"Rejected {record.id}: {result.value}")
            rejected.append(Rejection(record.id, record.dimension, result.value))
        else:
            accepted.append((record.id, result))
    logger.info(f"Validated {len(accepted)} polytopes, rejected {len(rejected)}")
    return accepted, rejected


def filter_by_index(
    polytopes: Iterable[tuple[str, FanoPolytope]], index: int
) -> list[tuple[str, FanoPolytope]]:
    """Keep the polytopes of one Gorenstein index."""
    return [(record_id, P) for record_id, P in polytopes if gorenstein_index(P) == index]


def deduplicate(
    polytopes: Iterable[tuple[str, FanoPolytope]], dedup: bool = True
) -> tuple[list[Candidate], int]:
    """Key every polytope and keep the first of each equivalence class.

    Returns:
        The candidates in input order and the number of dropped duplicates.
    """
    candidates: list[Candidate] = []
    seen: set[CanonicalKey] = set()
    duplicates = 0
    for record_id, P in polytopes:
        key = canonical_key(P)
        if dedup and key in seen:
            duplicates += 1
            continue
        seen.add(key)
        candidates.append(Candidate(record_id, P, key))
    logger.info(f"Kept {len(candidates)} classes, dropped {duplicates} duplicates")
    return candidates, duplicates


def _classify_candidate(candidate: Candidate, budget: int, max_hull_vertices: int) -> ResultRecord:
    return result_record(candidate.id, candidate.polytope, budget, max_hull_vertices)


def classify_candidates(
    candidates: list[Candidate],
    budget: int = DEFAULT_BUDGET,
    max_hull_vertices: int = DEFAULT_MAX_HULL_VERTICES,
    workers: int = 1,
) -> list[ResultRecord]:
    """Classify candidates, in input order, on ``workers`` processes."""
    work = partial(_classify_candidate, budget=budget, max_hull_vertices=max_hull_vertices)
    if workers <= 1 or len(candidates) <= 1:
        return [work(c) for c in candidates]
    logger.info(f"Classifying {len(candidates)} polytopes on {workers} workers")
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(work, candidates, chunksize=max(1, len(candidates) // (4 * workers))))


def tabulate(
    results: Iterable[ResultRecord],
    rejections: Iterable[Rejection] = (),
    smooth_only: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> pd.DataFrame:
    """Count verdicts per (dimension, Gorenstein index) group.

    Columns are the group keys, ``B0`` to ``B{budget-1}``, ``B_inf``,
    ``unresolved``, ``total``, ``KE`` and ``rejected``. Stored results from a
    longer run widen the strict-type range to their largest ``k``.
    """
    df = pd.DataFrame(
        [
            {
                "dimension": r.dimension,
                "gorenstein_index": r.gorenstein_index,
                "smooth": r.smooth,
                "kahler_einstein": r.kahler_einstein,
                "label": r.verdict.label,
                "k": r.verdict.k if r.verdict.k is not None else -1,
            }
            for r in results
        ],
        columns=GROUP_COLUMNS + ["smooth", "kahler_einstein", "label", "k"],
    )
    if smooth_only:
        df = df[df["smooth"]]

    max_k = int(df["k"].max()) if not df.empty else -1
    labels = [f"B{k}" for k in range(max(budget, max_k + 1))] + ["B_inf", "unresolved"]
    if df.empty:
        return pd.DataFrame(columns=GROUP_COLUMNS + labels + ["total", "KE", "rejected"])

    counts = pd.crosstab([df["dimension"], df["gorenstein_index"]], df["label"])
    counts = counts.reindex(columns=labels, fill_value=0)
    counts["total"] = counts[labels].sum(axis=1)
    counts["KE"] = df.groupby(GROUP_COLUMNS)["kahler_einstein"].sum().astype(int)

    table = counts.reset_index()
    table.columns.name = None
    rejected_by_dimension = pd.Series([r.dimension for r in rejections], dtype="int64").value_counts()
    table["rejected"] = table["dimension"].map(rejected_by_dimension).fillna(0).astype(int)
    return table.sort_values(GROUP_COLUMNS).reset_index(drop=True)


def census(
    records: Iterable[PolytopeRecord],
    budget: int = DEFAULT_BUDGET,
    max_hull_vertices: int = DEFAULT_MAX_HULL_VERTICES,
    dedup: bool = True,
    smooth_only: bool = False,
    workers: int = 1,
    index_filter: Optional[int] = None,
) -> CensusReport:
    """Validate, deduplicate, classify and tabulate a batch of polytopes.

    Example:
        >>> from data.enumerator import enumerate_fano_polygons
        >>> report = census(enumerate_fano_polygons(3, 6, index_filter=1))
        >>> int(report.table["total"].sum())
        16
    """
    accepted, rejections = validate_records(records)
    if index_filter is not None:
        accepted = filter_by_index(accepted, index_filter)
    candidates, duplicates = deduplicate(accepted, dedup)
    results = classify_candidates(candidates, budget, max_hull_vertices, workers)
    return CensusReport(
        table=tabulate(results, rejections, smooth_only, budget),
        results=results,
        rejected={r.id: r.reason for r in rejections},
        duplicates=duplicates,
    )
