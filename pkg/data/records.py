"""Pydantic records for polytope input and classification results.

Records are what crosses a process or file boundary: parsed input polytopes,
census results written to the store and read back on resume.
"""

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from config import ENGINE_VERSION, FailureReason, VerdictKind


class PolytopeRecord(BaseModel):
    """A polytope as read from an input file.

    Attributes:
        id: User-supplied identifier or a content hash.
        vertices: Lattice points, all of one dimension.
        tags: Free-form provenance, e.g. ``source=grdb``.
    """

    model_config = ConfigDict(frozen=True)

    id: str
    vertices: list[tuple[int, ...]]
    tags: dict[str, str] = Field(default_factory=dict)

    @field_validator("vertices")
    @classmethod
    def _uniform_dimension(cls, value: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
        if value and len({len(v) for v in value}) != 1:
            raise ValueError("vertices have mixed dimensions")
        if value and len(value[0]) == 0:
            raise ValueError("vertices must have at least one coordinate")
        return value

    @property
    def dimension(self) -> int:
        return len(self.vertices[0]) if self.vertices else 0


class VerdictSummary(BaseModel):
    """Serializable form of a type verdict."""

    model_config = ConfigDict(frozen=True)

    kind: VerdictKind
    k: Optional[int] = None
    reason: Optional[FailureReason] = None
    preperiod: Optional[int] = None
    period: Optional[int] = None
    budget: Optional[int] = None
    resource_abort: bool = False

    @property
    def label(self) -> str:
        """Census column label: ``B<k>``, ``B_inf`` or ``unresolved``."""
        if self.kind == VerdictKind.STRICT_TYPE:
            return f"B{self.k}"
        if self.kind == VerdictKind.PERIODIC:
            return "B_inf"
        return "unresolved"


class TrajectorySummary(BaseModel):
    """Per-step vertex counts, keys and flags of a trajectory."""

    model_config = ConfigDict(frozen=True)

    vertex_counts: list[int]
    keys: list[str]
    kahler_einstein: list[bool] = Field(default_factory=list)
    terminal_vertices: Optional[list[tuple[int, ...]]] = None


class ResultRecord(BaseModel):
    """Classification result for one polytope, one JSON object per store line."""

    model_config = ConfigDict(frozen=True)

    id: str
    canonical_key: str
    dimension: int
    vertex_count: int
    gorenstein_index: int
    smooth: bool
    symmetric: bool
    kahler_einstein: bool
    verdict: VerdictSummary
    trajectory: TrajectorySummary
    engine_version: str = ENGINE_VERSION
