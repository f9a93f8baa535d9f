"""Append-only results store.

Each line of the store file is one :class:`data.records.ResultRecord` as JSON.
Records are never rewritten: a newer record for the same canonical key simply
appears later in the file and wins on load. Appends are serialized by a lock
and flushed to disk before returning.
"""

import logging
import os
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional, Union

from pydantic import ValidationError

from config import ENGINE_VERSION, ERROR_STORE_NOT_CONFIGURED, STORE_PATH_ENV
from errors import StoreError
from data.records import ResultRecord

logger = logging.getLogger(__name__)


@dataclass
class ResultsStore:
    """Line-oriented store of classification results keyed by canonical key.

    Attributes:
        path: Store file; created on first use.
        records: Latest record per canonical key, loaded on construction.
    """

    path: Path
    records: dict[str, ResultRecord] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self) -> None:
        self.path = Path(self.path)
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self.path.touch(exist_ok=True)
        except OSError as e:
            raise StoreError(f"cannot open results store {self.path}: {e}") from e
        self._load()

    @classmethod
    def from_env(cls, path: Optional[Union[str, Path]] = None) -> "ResultsStore":
        """Open the store named by ``path`` or the configured environment variable.

        Raises:
            StoreError: If neither is set.
        """
        target = path or os.getenv(STORE_PATH_ENV, "")
        if not target:
            raise StoreError(ERROR_STORE_NOT_CONFIGURED)
        return cls(Path(target))

    def _load(self) -> None:
        skipped = 0
        with self.path.open("r", encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    record = ResultRecord.model_validate_json(line)
                except ValidationError:
                    # A torn final line from an interrupted append.
                    skipped += 1
                    logger.warning(f"Skipping unreadable store line {number} in {self.path}")
                    continue
                self.records[record.canonical_key] = record
        logger.info(f"Loaded {len(self.records)} records from {self.path} ({skipped} skipped)")

    def append(self, record: ResultRecord) -> None:
        """Append one record and flush it to disk.

        Raises:
            StoreError: If the file cannot be written.
        """
        line = record.model_dump_json() + "\n"
        with self._lock:
            try:
                with self.path.open("a", encoding="utf-8") as handle:
                    handle.write(line)
                    handle.flush()
                    os.fsync(handle.fileno())
            except OSError as e:
                raise StoreError(f"cannot append to results store {self.path}: {e}") from e
            self.records[record.canonical_key] = record

    def extend(self, records: list[ResultRecord]) -> None:
        for record in records:
            self.append(record)

    def get(self, canonical_key: str) -> Optional[ResultRecord]:
        return self.records.get(canonical_key)

    def reusable(self, canonical_key: str) -> Optional[ResultRecord]:
        """Stored record for a key, if it was produced by this engine version."""
        record = self.records.get(canonical_key)
        if record is None or record.engine_version != ENGINE_VERSION:
            return None
        return record

    def __contains__(self, canonical_key: object) -> bool:
        return canonical_key in self.records

    def __iter__(self) -> Iterator[ResultRecord]:
        return iter(self.records.values())

    def __len__(self) -> int:
        return len(self.records)
