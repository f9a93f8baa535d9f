"""Query functions over the results store.

The store's records are flattened into a pandas DataFrame, one row per
canonical key, and filtered there.
"""

import logging
from typing import Any, Optional

import pandas as pd

from config import VerdictKind
from data.records import ResultRecord
from data.store import ResultsStore

logger = logging.getLogger(__name__)

STORE_COLUMNS = [
    "id",
    "canonical_key",
    "dimension",
    "vertex_count",
    "gorenstein_index",
    "smooth",
    "symmetric",
    "kahler_einstein",
    "verdict",
    "label",
    "k",
    "preperiod",
    "period",
    "engine_version",
]


def get_dataframe(store: ResultsStore) -> pd.DataFrame:
    """Flatten the store into a DataFrame.

    Args:
        store: Opened results store.

    Returns:
        DataFrame with one row per stored canonical key, columns as in
        ``STORE_COLUMNS``.

    Example:
        >>> df = get_dataframe(ResultsStore.from_env())
        >>> df[df["label"] == "B_inf"]["id"].tolist()
    """
    rows = [
        {
            "id": r.id,
            "canonical_key": r.canonical_key,
            "dimension": r.dimension,
            "vertex_count": r.vertex_count,
            "gorenstein_index": r.gorenstein_index,
            "smooth": r.smooth,
            "symmetric": r.symmetric,
            "kahler_einstein": r.kahler_einstein,
            "verdict": r.verdict.kind.value,
            "label": r.verdict.label,
            "k": r.verdict.k,
            "preperiod": r.verdict.preperiod,
            "period": r.verdict.period,
            "engine_version": r.engine_version,
        }
        for r in store
    ]
    return pd.DataFrame(rows, columns=STORE_COLUMNS)


def query_frame(
    store: ResultsStore,
    dimension: Optional[int] = None,
    index: Optional[int] = None,
    verdict: Optional[VerdictKind] = None,
    canonical_key: Optional[str] = None,
) -> pd.DataFrame:
    """Filter stored results.

    Args:
        store: Opened results store.
        dimension: Keep only this dimension. If None, all dimensions.
        index: Keep only this Gorenstein index. If None, all indices.
        verdict: Keep only this verdict kind. If None, all verdicts.
        canonical_key: Keep only this key (hex). If None, all keys.

    Returns:
        The matching rows, sorted by dimension, index and id.
    """
    df = get_dataframe(store)

    if dimension is not None:
        df = df[df["dimension"] == dimension]
    if index is not None:
        df = df[df["gorenstein_index"] == index]
    if verdict is not None:
        df = df[df["verdict"] == VerdictKind(verdict).value]
    if canonical_key is not None:
        df = df[df["canonical_key"] == canonical_key]

    df = df.sort_values(["dimension", "gorenstein_index", "id"]).reset_index(drop=True)
    logger.info(
        f"Store query (dimension={dimension}, index={index}, verdict={verdict}): {len(df)} rows"
    )
    return df


def query_records(store: ResultsStore, **filters: Any) -> list[ResultRecord]:
    """Like :func:`query_frame` but returns the stored records themselves.

    Example:
        >>> records = query_records(store, canonical_key=key)
    """
    df = query_frame(store, **filters)
    return [store.records[key] for key in df["canonical_key"]]


def get_store_stats(store: ResultsStore) -> dict[str, Any]:
    """Summary counts of the store contents.

    Returns:
        Dictionary with the record count, dimensions, indices, verdict
        histogram and engine versions present.
    """
    df = get_dataframe(store)
    stats = {
        "record_count": int(len(df)),
        "dimensions": sorted(int(d) for d in df["dimension"].unique()),
        "indices": sorted(int(i) for i in df["gorenstein_index"].unique()),
        "verdicts": {str(k): int(v) for k, v in df["label"].value_counts().sort_index().items()},
        "engine_versions": sorted(str(v) for v in df["engine_version"].unique()),
    }
    logger.info(f"Store stats: {stats['record_count']} records")
    return stats
