"""Exact lattice arithmetic: primitive vectors, determinants, unimodular maps.

Vectors are plain tuples of Python ``int`` (lattice points) or
``fractions.Fraction`` (rational points), so they are immutable, hashable and
arbitrary precision. Nothing in this module rounds. Determinants, ranks and
inverses go through sympy's ``DomainMatrix`` over ``ZZ`` and ``QQ``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from config import ERROR_NO_PRIMITIVE_DIRECTION
from errors import DimensionMismatchError, UnsupportedDimensionError, ZeroVectorError

logger = logging.getLogger(__name__)

LatticeVector = tuple[int, ...]
RationalVector = tuple[Fraction, ...]
Number = Union[int, Fraction]
Vector = tuple[Number, ...]


def primitive_index(v: Sequence[int]) -> int:
    """Return the gcd of the absolute values of all coordinates.

    Args:
        v: Lattice vector; the zero vector is allowed.

    Returns:
        The primitive index I(v); 0 for the zero vector.

    Example:
        >>> primitive_index((-30, -18))
        6
    """
    return reduce(gcd, (abs(int(x)) for x in v), 0)


def primitivize(v: Sequence[int]) -> LatticeVector:
    """Divide a nonzero lattice vector by its primitive index.

    Args:
        v: Nonzero lattice vector.

    Returns:
        The primitive vector pointing in the same direction.

    Raises:
        ZeroVectorError: If ``v`` is the zero vector.

    Example:
        >>> primitivize((0, -4))
        (0, -1)
    """
    index = primitive_index(v)
    if index == 0:
        raise ZeroVectorError(ERROR_NO_PRIMITIVE_DIRECTION)
    return tuple(int(x) // index for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    """Return True if ``v`` is a lattice vector with primitive index 1."""
    return all(_is_integral(x) for x in v) and primitive_index(v) == 1


def order2(u: Sequence[Number], v: Sequence[Number]) -> Number:
    """Signed area of the parallelogram spanned by two plane vectors.

    This is ord(u, v) = x_u * y_v - y_u * x_v.

    Raises:
        UnsupportedDimensionError: If either vector is not 2-dimensional.
    """
    if len(u) != 2 or len(v) != 2:
        raise UnsupportedDimensionError(
            f"order2 needs plane vectors, got dimensions {len(u)} and {len(v)}"
        )
    return u[0] * v[1] - u[1] * v[0]


def det_n(vectors: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix.

    Args:
        vectors: The d rows (equivalently columns) of the matrix.

    Returns:
        The determinant as an ``int``.

    Raises:
        DimensionMismatchError: If the matrix is not square.

    Example:
        >>> det_n([(1, 1), (-1, 1)])
        2
    """
    n = len(vectors)
    if any(len(row) != n for row in vectors):
        raise DimensionMismatchError(f"det_n needs a square matrix, got {n} rows")
    if n == 0:
        return 1
    return int(domain_matrix(vectors, ZZ).det())


def rational_det(vectors: Sequence[Sequence[Number]]) -> Fraction:
    """Exact determinant of a square rational matrix."""
    n = len(vectors)
    if any(len(row) != n for row in vectors):
        raise DimensionMismatchError(f"rational_det needs a square matrix, got {n} rows")
    if n == 0:
        return Fraction(1)
    return _from_qq(domain_matrix(vectors, QQ).det())


def rank(rows: Sequence[Sequence[Number]]) -> int:
    """Rank of a rational matrix given by its rows."""
    return len(row_echelon(rows)[1])


def row_echelon(rows: Sequence[Sequence[Number]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals.

    Returns:
        The nonzero reduced rows and the list of pivot columns.
    """
    if not rows or not rows[0]:
        return [], []
    reduced, pivots = domain_matrix(rows, QQ).rref()
    top = reduced.to_list()[: len(pivots)]
    return [[_from_qq(x) for x in row] for row in top], list(pivots)


def inverse(matrix: Sequence[Sequence[Number]]) -> list[list[Fraction]]:
    """Inverse of a nonsingular rational matrix.

    Raises:
        DimensionMismatchError: If the matrix is not square.
        ValueError: If the matrix is singular.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise DimensionMismatchError("inverse needs a square matrix")
    if n == 0:
        return []
    try:
        inverted = domain_matrix(matrix, QQ).inv()
    except DMNonInvertibleMatrixError as e:
        raise ValueError("matrix is singular") from e
    return [[_from_qq(x) for x in row] for row in inverted.to_list()]


def domain_matrix(rows: Sequence[Sequence[Number]], domain=ZZ) -> DomainMatrix:
    """Wrap a list of rows as a sympy ``DomainMatrix`` over ``ZZ`` or ``QQ``.

    Raises:
        DimensionMismatchError: If the rows have different lengths.
    """
    width = len(rows[0]) if rows else 0
    if any(len(row) != width for row in rows):
        raise DimensionMismatchError("rows of a matrix must have equal length")
    if domain == ZZ:
        elements = [[ZZ(int(x)) for x in row] for row in rows]
    else:
        elements = [[_to_qq(x) for x in row] for row in rows]
    return DomainMatrix(elements, (len(rows), width), domain)


def _to_qq(x: Number):
    value = Fraction(x)
    return QQ(value.numerator, value.denominator)


def _from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def mat_vec(matrix: Sequence[Sequence[Number]], v: Sequence[Number]) -> Vector:
    """Exact matrix-vector product."""
    if any(len(row) != len(v) for row in matrix):
        raise DimensionMismatchError(
            f"cannot apply a {len(matrix)}x{len(matrix[0]) if matrix else 0} matrix "
            f"to a vector of dimension {len(v)}"
        )
    return tuple(sum(a * b for a, b in zip(row, v)) for row in matrix)


def mat_mul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]]) -> list[list[Number]]:
    """Exact matrix product ``a @ b``."""
    columns = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in columns] for row in a]


def transpose(matrix: Sequence[Sequence[Number]]) -> list[list[Number]]:
    """Transpose of a matrix given by rows."""
    return [list(col) for col in zip(*matrix)]


def add(u: Sequence[Number], v: Sequence[Number]) -> Vector:
    """Coordinate-wise sum of two vectors of equal dimension."""
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot add dimensions {len(u)} and {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Number], v: Sequence[Number]) -> Vector:
    """Coordinate-wise difference of two vectors of equal dimension."""
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot subtract dimensions {len(u)} and {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def dot(u: Sequence[Number], v: Sequence[Number]) -> Number:
    """Standard inner product."""
    if len(u) != len(v):
        raise DimensionMismatchError(f"cannot pair dimensions {len(u)} and {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vector_sum(vectors: Iterable[Sequence[Number]], dim: int) -> Vector:
    """Sum of an iterable of vectors of dimension ``dim``."""
    total: list[Number] = [0] * dim
    for v in vectors:
        if len(v) != dim:
            raise DimensionMismatchError(f"expected dimension {dim}, got {len(v)}")
        for i, x in enumerate(v):
            total[i] += x
    return tuple(total)


def normalize(v: Sequence[Number]) -> Vector:
    """Store integral coordinates as ``int`` and the rest as ``Fraction``."""
    return tuple(int(x) if _is_integral(x) else Fraction(x) for x in v)


def integral_direction(v: Sequence[Number]) -> LatticeVector:
    """Primitive integer vector positively proportional to a rational vector.

    Raises:
        ZeroVectorError: If ``v`` is the zero vector.
    """
    denominator = lcm(*(Fraction(x).denominator for x in v))
    return primitivize(tuple(int(Fraction(x) * denominator) for x in v))


def _is_integral(x: Number) -> bool:
    return isinstance(x, int) or Fraction(x).denominator == 1


@dataclass(frozen=True)
class UnimodularMap:
    """Integer linear map with determinant +1 or -1.

    Attributes:
        matrix: The d x d integer matrix as a tuple of rows.
    """

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        d = len(self.matrix)
        if any(len(row) != d for row in self.matrix):
            raise DimensionMismatchError("unimodular map needs a square matrix")
        if abs(det_n(self.matrix)) != 1:
            raise ValueError(f"matrix {self.matrix} is not unimodular")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "UnimodularMap":
        """Build a map from any nested iterable of integers."""
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, d: int) -> "UnimodularMap":
        """The identity map of dimension ``d``."""
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    @classmethod
    def negation(cls, d: int) -> "UnimodularMap":
        """The map x -> -x of dimension ``d``."""
        return cls(tuple(tuple(-int(i == j) for j in range(d)) for i in range(d)))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    @property
    def determinant(self) -> int:
        return det_n(self.matrix)

    def is_identity(self) -> bool:
        return self == UnimodularMap.identity(self.dim)

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """Return the map ``self ∘ other``."""
        return UnimodularMap.from_rows(mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "UnimodularMap":
        """Return the inverse map, which is again integral."""
        return UnimodularMap.from_rows(inverse(self.matrix))

    def __call__(self, v: Sequence[Number]) -> Vector:
        return apply_map(self, v)


def apply_map(u: UnimodularMap, v: Sequence[Number]) -> Vector:
    """Apply a unimodular map to a lattice or rational vector.

    Raises:
        DimensionMismatchError: If the dimensions differ.

    Example:
        >>> apply_map(UnimodularMap.negation(2), (3, -4))
        (-3, 4)
    """
    return normalize(mat_vec(u.matrix, v))
