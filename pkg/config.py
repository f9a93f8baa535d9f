"""Configuration and constants for the barycentric transformation toolkit.

This module contains all configuration settings, constants, and enums used
throughout the application.
"""

import os
from enum import Enum
from typing import Final

from dotenv import load_dotenv

# Load environment variables
load_dotenv()


# Engine Configuration
ENGINE_VERSION: Final[str] = "1.0.0"
DEFAULT_BUDGET: Final[int] = 64
DEFAULT_MAX_HULL_VERTICES: Final[int] = 1_000_000
DEFAULT_PSEUDO_PERIODIC_WINDOW: Final[int] = 4


# Environment Configuration
STORE_PATH_ENV: Final[str] = "BARYCENTRIC_STORE"
LOG_LEVEL: str = os.getenv("BARYCENTRIC_LOG_LEVEL", "INFO")
CENSUS_WORKERS: int = int(os.getenv("BARYCENTRIC_WORKERS", "1"))
GRDB_DIR_ENV: Final[str] = "BARYCENTRIC_GRDB_DIR"


# Fixture lookup
FUZZY_MATCH_THRESHOLD: Final[int] = 80


# Enumerator Configuration
DEFAULT_ENUMERATION_BOX: Final[int] = 3
DEFAULT_ENUMERATION_MAX_VERTICES: Final[int] = 6


# Fano failure reasons
class FailureReason(str, Enum):
    """Why a point set is not a Fano polytope."""

    DIMENSION_DROP = "DimensionDrop"
    ORIGIN_NOT_INTERIOR = "OriginNotInterior"
    NON_PRIMITIVE_VERTEX = "NonPrimitiveVertex"


# Verdict kinds
class VerdictKind(str, Enum):
    """Outcome classes of iterated B-transformation."""

    STRICT_TYPE = "strict_type"
    PERIODIC = "periodic"
    UNRESOLVED = "unresolved"


# Input formats
class InputFormat(str, Enum):
    """Polytope file formats accepted by the parser."""

    PLAIN = "plain"
    JSON = "json"
    GRDB_MATRIX = "grdb-matrix"


# Output formats
class OutputFormat(str, Enum):
    """Census report formats."""

    TEXT = "text"
    CSV = "csv"
    JSON = "json"


# Exit Status
EXIT_OK: Final[int] = 0
EXIT_INPUT_ERROR: Final[int] = 1
EXIT_RESOURCE_ERROR: Final[int] = 2


# Figure Configuration
SVG_HASH_SALT: Final[str] = "barycentric"
SVG_PANEL_SIZE: Final[float] = 2.4


# Error Messages
ERROR_NO_PRIMITIVE_DIRECTION: Final[str] = "no primitive direction"
ERROR_CONE_BARYCENTER_UNDEFINED: Final[str] = "cone barycenter undefined"
ERROR_DEGENERATE_POLYTOPE: Final[str] = "polytope is not full-dimensional"
ERROR_ORIGIN_NOT_INTERIOR: Final[str] = "origin is not an interior point"
ERROR_EMPTY_INPUT: Final[str] = "no points given"
ERROR_MIXED_DIMENSIONS: Final[str] = "points have mixed dimensions"
ERROR_NOT_FANO: Final[str] = "input is not a Fano polytope"
ERROR_FIXTURE_NOT_FOUND: Final[str] = "Fixture not found in the catalog."
ERROR_STORE_NOT_CONFIGURED: Final[str] = (
    f"No results store configured. Pass --store or set {STORE_PATH_ENV}."
)
ERROR_PLANAR_ONLY: Final[str] = "only planar polytopes can be drawn"
