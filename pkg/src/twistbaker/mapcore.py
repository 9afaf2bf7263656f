"""Phase space and the twisted baker map, in exact rational arithmetic.

The phase space is X = [-1,1] x [0,1]^(m-1) for a dimension m >= 2.  The
map doubles the first coordinate on the left half X_L = {x1 < 0} and, on
the right half X_R = {x1 >= 0}, rotates the coordinate axes one slot
before applying the flipped stretch, so the expansion is handed around
the axes as an orbit revisits X_R.  It factors as the rotation step
followed by a tent-map stretch of the first coordinate.

Every operation here is a pure function on tuples of ``Fraction``; no
floating point is used anywhere (repeated doubling exhausts a float
mantissa after ~53 steps, which would silently destroy long orbits).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import OutsideDomainError

LEFT = "L"
RIGHT = "R"

Point = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def check_dim(dim: int) -> int:
    if not isinstance(dim, int) or dim < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {dim!r}")
    return dim


def as_point(coords, dim: int | None = None) -> Point:
    """Coerce a coordinate sequence to an exact point of X, validating membership."""
    p = tuple(Fraction(c) for c in coords)
    if dim is not None and len(p) != dim:
        raise OutsideDomainError(f"expected {dim} coordinates, got {len(p)}")
    check_dim(len(p))
    if not (-_ONE <= p[0] <= _ONE):
        raise OutsideDomainError(f"x1 = {p[0]} outside [-1, 1]")
    for j, c in enumerate(p[1:], start=2):
        if not (_ZERO <= c <= _ONE):
            raise OutsideDomainError(f"x{j} = {c} outside [0, 1]")
    return p


def region(p: Point) -> str:
    """Return "L" if x1 < 0, else "R" (the boundary x1 = 0 belongs to X_R)."""
    p = as_point(p)
    return LEFT if p[0] < 0 else RIGHT


def apply(p: Point) -> Point:
    """One exact step of the map."""
    p = as_point(p)
    if p[0] < 0:
        return (1 + 2 * p[0],) + p[1:]
    return (1 - 2 * p[-1],) + p[:-1]


def apply_t(p: Point) -> Point:
    """The twist factor: identity on X_L, cyclic coordinate rotation on X_R."""
    p = as_point(p)
    if p[0] < 0:
        return p
    return (p[-1],) + p[:-1]


def apply_b(p: Point) -> Point:
    """The stretch factor: tent map on the first coordinate, identity elsewhere."""
    p = as_point(p)
    x1 = 1 + 2 * p[0] if p[0] < 0 else 1 - 2 * p[0]
    return (x1,) + p[1:]


@dataclass(frozen=True)
class AffineMap:
    """An exact affine map x -> matrix @ x + offset with integer entries."""

    matrix: tuple[tuple[int, ...], ...]
    offset: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.offset)

    def __call__(self, p) -> Point:
        p = tuple(Fraction(c) for c in p)
        return tuple(
            sum(a * x for a, x in zip(row, p)) + b
            for row, b in zip(self.matrix, self.offset)
        )

    def then(self, other: "AffineMap") -> "AffineMap":
        """Composition other(self(x)), accumulating exact integer entries."""
        m = self.dim
        mat = tuple(
            tuple(
                sum(other.matrix[i][k] * self.matrix[k][j] for k in range(m))
                for j in range(m)
            )
            for i in range(m)
        )
        off = tuple(
            sum(other.matrix[i][k] * self.offset[k] for k in range(m))
            + other.offset[i]
            for i in range(m)
        )
        return AffineMap(mat, off)

    def determinant(self) -> int:
        return _int_det([list(row) for row in self.matrix])


def _int_det(rows: list[list[int]]) -> int:
    """Fraction-free (Bareiss) determinant of a small integer matrix."""
    m = len(rows)
    sign = 1
    prev = 1
    for k in range(m - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, m):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = rows[k][k]
    return sign * rows[m - 1][m - 1]


def branch_affine(label: str, dim: int) -> AffineMap:
    """Exact affine form of the map restricted to one region.

    L branch: diag(2, 1, ..., 1) with offset (1, 0, ..., 0).
    R branch: the scaled cyclic-rotation matrix with -2 in the upper right
    corner and ones on the subdiagonal, same offset.
    """
    m = check_dim(dim)
    offset = (1,) + (0,) * (m - 1)
    if label == LEFT:
        mat = tuple(
            tuple((2 if i == j == 0 else 1 if i == j else 0) for j in range(m))
            for i in range(m)
        )
    elif label == RIGHT:
        rows = [[0] * m for _ in range(m)]
        rows[0][m - 1] = -2
        for i in range(1, m):
            rows[i][i - 1] = 1
        mat = tuple(tuple(r) for r in rows)
    else:
        raise ValueError(f"unknown region label {label!r}")
    return AffineMap(mat, offset)


def kneading_prefix(p: Point, n: int) -> str:
    """First n symbols of the itinerary of p: which half each iterate visits."""
    if n < 0:
        raise ValueError("prefix length must be nonnegative")
    p = as_point(p)
    out = []
    for _ in range(n):
        if p[0] < 0:
            out.append(LEFT)
            p = (1 + 2 * p[0],) + p[1:]
        else:
            out.append(RIGHT)
            p = (1 - 2 * p[-1],) + p[:-1]
    return "".join(out)


def orbit(p: Point, n: int) -> list[Point]:
    """The points p, F(p), ..., F^n(p)."""
    p = as_point(p)
    out = [p]
    for _ in range(n):
        if p[0] < 0:
            p = (1 + 2 * p[0],) + p[1:]
        else:
            p = (1 - 2 * p[-1],) + p[:-1]
        out.append(p)
    return out
