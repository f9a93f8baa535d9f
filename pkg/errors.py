"""Exception hierarchy for the barycentric transformation toolkit.

Geometric outcomes such as "B(P) is not Fano" are values, not exceptions;
everything here signals misuse, malformed input, or an exhausted resource.
"""

from typing import Optional


class BarycentricError(Exception):
    """Base class for all errors raised by this package."""


class GeometryError(BarycentricError, ValueError):
    """Invalid geometric input."""


class DimensionMismatchError(GeometryError):
    """Vectors or matrices of incompatible dimensions were combined."""


class ZeroVectorError(GeometryError):
    """A primitive direction was requested for the zero vector."""


class DegeneratePolytopeError(GeometryError):
    """An operation that needs a full-dimensional polytope got a flat one."""


class ConeBarycenterError(GeometryError):
    """The generators of a maximal cone sum to zero."""


class UnsupportedDimensionError(GeometryError):
    """The operation is only defined in a specific dimension."""


class ParseError(BarycentricError, ValueError):
    """Malformed polytope input.

    Attributes:
        line: 1-based line number of the offending input, when known.
    """

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class StoreError(BarycentricError, OSError):
    """The results store could not be read or written."""
