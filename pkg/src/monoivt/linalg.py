"""Exact rational vectors and matrices.

Everything here is built on :class:`fractions.Fraction`, so no operation ever
rounds.  Values are immutable once constructed.

Example:
    >>> A = Matrix([[4, 3], [1, 1]])
    >>> inverse(A)
    Matrix([[1, -3], [-1, 4]])
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction, str]


class DimensionError(ValueError):
    """Operand shapes do not fit together."""


class NotInvertible(ArithmeticError):
    """Raised by :func:`inverse` for a singular square matrix."""


def to_rational(value: Scalar) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(value, float):
        # Fraction(float) is exact but almost never what the caller meant.
        raise TypeError(f"float entry {value!r}; pass an int, Fraction or 'p/q' string")
    return Fraction(value)


class Vector:
    """Immutable column vector with rational entries."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[Scalar]):
        values = tuple(to_rational(v) for v in entries)
        if not values:
            raise DimensionError("vectors must have at least one entry")
        self._entries = values

    @classmethod
    def zeros(cls, dim: int) -> Vector:
        return cls([0] * dim)

    @classmethod
    def unit(cls, dim: int, k: int) -> Vector:
        """The k-th standard basis vector (0-based)."""
        return cls([1 if i == k else 0 for i in range(dim)])

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._entries

    @property
    def dim(self) -> int:
        return len(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._entries)

    def __getitem__(self, i: int) -> Fraction:
        return self._entries[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(("Vector", self._entries))

    def __repr__(self) -> str:
        return f"Vector([{', '.join(_fmt(v) for v in self._entries)}])"

    def _check(self, other: Vector) -> None:
        if not isinstance(other, Vector):
            raise TypeError(f"expected Vector, got {type(other).__name__}")
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(a + b for a, b in zip(self, other))

    def __sub__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(a - b for a, b in zip(self, other))

    def __neg__(self) -> Vector:
        return Vector(-a for a in self)

    def __mul__(self, scalar: Scalar) -> Vector:
        if isinstance(scalar, (Vector, Matrix)):
            return NotImplemented
        c = to_rational(scalar)
        return Vector(c * a for a in self)

    __rmul__ = __mul__

    def dot(self, other: Vector) -> Fraction:
        self._check(other)
        return sum((a * b for a, b in zip(self, other)), Fraction(0))

    def is_nonneg(self) -> bool:
        return all(v >= 0 for v in self._entries)

    def is_zero(self) -> bool:
        return not any(self._entries)

    def primitive(self) -> Vector:
        """Scale to coprime integers with the same direction (zero stays zero)."""
        return Vector(primitive_integer(self._entries))


class Matrix:
    """Immutable dense rational matrix, stored row-major.

    ``Matrix(rows)`` requires at least one row and one column.  Shapes with a
    zero dimension only arise as intermediate results (an empty block ``S`` of
    a full-column-rank decomposition, an empty left-nullspace basis) and are
    built with :meth:`empty`.
    """

    __slots__ = ("_rows", "_shape")

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        grid = tuple(tuple(to_rational(v) for v in row) for row in rows)
        if not grid or not grid[0]:
            raise DimensionError("matrices must have at least one row and one column")
        width = len(grid[0])
        for i, row in enumerate(grid):
            if len(row) != width:
                raise DimensionError(f"row {i} has {len(row)} entries, expected {width}")
        self._rows = grid
        self._shape = (len(grid), width)

    @classmethod
    def empty(cls, m: int, n: int) -> Matrix:
        if m < 0 or n < 0 or (m > 0 and n > 0):
            raise DimensionError(f"empty() needs a zero dimension, got {m}x{n}")
        obj = object.__new__(cls)
        obj._rows = tuple(() for _ in range(m))
        obj._shape = (m, n)
        return obj

    @classmethod
    def _from_grid(cls, grid: Sequence[Sequence[Fraction]], m: int, n: int) -> Matrix:
        if m == 0 or n == 0:
            return cls.empty(m, n)
        obj = object.__new__(cls)
        obj._rows = tuple(tuple(row) for row in grid)
        obj._shape = (m, n)
        return obj

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, m: int, n: int) -> Matrix:
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def from_columns(cls, columns: Sequence[Vector]) -> Matrix:
        if not columns:
            raise DimensionError("need at least one column")
        m = columns[0].dim
        if any(c.dim != m for c in columns):
            raise DimensionError("columns differ in length")
        return cls([[c[i] for c in columns] for i in range(m)])

    @classmethod
    def from_rows(cls, rows: Sequence[Vector]) -> Matrix:
        return cls([list(r) for r in rows])

    @property
    def shape(self) -> tuple[int, int]:
        return self._shape

    @property
    def m(self) -> int:
        return self._shape[0]

    @property
    def n(self) -> int:
        return self._shape[1]

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, i: int) -> Vector:
        return Vector(self._rows[i])

    def col(self, j: int) -> Vector:
        return Vector(r[j] for r in self._rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._shape == other._shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(("Matrix", self._shape, self._rows))

    def __repr__(self) -> str:
        if self.m == 0 or self.n == 0:
            return f"Matrix.empty({self.m}, {self.n})"
        body = ", ".join("[" + ", ".join(_fmt(v) for v in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    @property
    def T(self) -> Matrix:
        m, n = self._shape
        return Matrix._from_grid([[self._rows[i][j] for i in range(m)] for j in range(n)], n, m)

    def transpose(self) -> Matrix:
        return self.T

    def __matmul__(self, other):
        if isinstance(other, Vector):
            if other.dim != self.n:
                raise DimensionError(f"cannot apply {self.m}x{self.n} matrix to vector of dim {other.dim}")
            if self.m == 0:
                raise DimensionError("product would be an empty vector")
            return Vector(sum((a * b for a, b in zip(r, other)), Fraction(0)) for r in self._rows)
        if isinstance(other, Matrix):
            if other.m != self.n:
                raise DimensionError(f"cannot multiply {self.m}x{self.n} by {other.m}x{other.n}")
            cols = list(zip(*other._rows)) if other.m else [()] * other.n
            grid = [[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols] for r in self._rows]
            return Matrix._from_grid(grid, self.m, other.n)
        return NotImplemented

    def _same_shape(self, other: Matrix) -> None:
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if other._shape != self._shape:
            raise DimensionError(f"shape mismatch: {self._shape} vs {other._shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        grid = [[a + b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        return Matrix._from_grid(grid, *self._shape)

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        grid = [[a - b for a, b in zip(r, s)] for r, s in zip(self._rows, other._rows)]
        return Matrix._from_grid(grid, *self._shape)

    def __neg__(self) -> Matrix:
        return Matrix._from_grid([[-a for a in r] for r in self._rows], *self._shape)

    def __mul__(self, scalar: Scalar) -> Matrix:
        if isinstance(scalar, (Vector, Matrix)):
            return NotImplemented
        c = to_rational(scalar)
        return Matrix._from_grid([[c * a for a in r] for r in self._rows], *self._shape)

    __rmul__ = __mul__

    def is_square(self) -> bool:
        return self.m == self.n

    def is_nonneg(self) -> bool:
        return all(v >= 0 for r in self._rows for v in r)

    def is_zero(self) -> bool:
        return not any(v for r in self._rows for v in r)

    def is_permutation(self) -> bool:
        if not self.is_square():
            return False
        for r in self._rows:
            if sorted(r) != [0] * (self.n - 1) + [1]:
                return False
        return all(sum(r[j] for r in self._rows) == 1 for j in range(self.n))

    def columns_subset(self, cols: Sequence[int]) -> Matrix:
        return Matrix._from_grid([[r[j] for j in cols] for r in self._rows], self.m, len(cols))

    def rows_subset(self, rows: Sequence[int]) -> Matrix:
        return Matrix._from_grid([self._rows[i] for i in rows], len(rows), self.n)


def _fmt(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def primitive_integer(values: Sequence[Fraction]) -> list[Fraction]:
    """Clear denominators and divide by the gcd; keeps the sign pattern."""
    den = lcm(*(v.denominator for v in values)) if values else 1
    ints = [int(v * den) for v in values]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return [Fraction(0)] * len(values)
    return [Fraction(a // g) for a in ints]


def leq_vec(x: Vector, y: Vector) -> bool:
    """Componentwise order: ``x <= y`` iff every coordinate is."""
    if x.dim != y.dim:
        raise DimensionError(f"dimension mismatch: {x.dim} vs {y.dim}")
    return all(a <= b for a, b in zip(x, y))


# --------------------------------------------------------------------------
# Row reduction
# --------------------------------------------------------------------------


def _gauss_jordan(rows: list[list[Fraction]], track: list[list[Fraction]] | None) -> list[int]:
    """Reduce ``rows`` to RREF in place, applying the same row ops to ``track``.

    Columns are scanned left to right; the pivot is the topmost row, among those
    not yet holding a pivot, with a nonzero entry.  Returns the pivot columns.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            if track is not None:
                track[p], track[r] = track[r], track[p]
        piv = rows[r][c]
        if piv != 1:
            inv = 1 / piv
            rows[r] = [v * inv for v in rows[r]]
            if track is not None:
                track[r] = [v * inv for v in track[r]]
        for i in range(m):
            f = rows[i][c]
            if i == r or f == 0:
                continue
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            if track is not None:
                track[i] = [a - f * b for a, b in zip(track[i], track[r])]
        pivots.append(c)
        r += 1
    return pivots


def rank(A: Matrix) -> int:
    if A.m == 0 or A.n == 0:
        return 0
    return len(_gauss_jordan([list(r) for r in A.rows], None))


@dataclass(frozen=True)
class QapDecomposition:
    """``q @ A @ p == [[I_k, s], [0, 0]]`` with q invertible and p a permutation.

    ``columns`` lists the original column index placed at each position of
    ``A @ p``: the pivot columns first, then the free ones, each group in
    increasing order.
    """

    q: Matrix
    p: Matrix
    s: Matrix
    rank: int
    columns: tuple[int, ...]

    @property
    def pivot_columns(self) -> tuple[int, ...]:
        return self.columns[: self.rank]

    @property
    def free_columns(self) -> tuple[int, ...]:
        return self.columns[self.rank :]

    def reduced_form(self) -> Matrix:
        """The block matrix ``[[I_k, S], [0, 0]]`` of shape m x n."""
        m, n, k = self.q.m, self.p.n, self.rank
        grid = []
        for i in range(m):
            if i < k:
                grid.append([Fraction(int(i == j)) for j in range(k)] + list(self.s.rows[i]))
            else:
                grid.append([Fraction(0)] * n)
        return Matrix(grid)

    def particular_solution(self, b: Vector) -> Vector | None:
        """Solution of ``A x = b`` with every free variable set to zero.

        Returns None when ``b`` is outside the range of A (a nonzero entry of
        ``q @ b`` below row k).
        """
        if b.dim != self.q.n:
            raise DimensionError(f"right-hand side has dim {b.dim}, expected {self.q.n}")
        qb = self.q @ b
        if any(qb[i] for i in range(self.rank, qb.dim)):
            return None
        x = [Fraction(0)] * self.p.n
        for i, col in enumerate(self.pivot_columns):
            x[col] = qb[i]
        return Vector(x)


def qap_decompose(A: Matrix) -> QapDecomposition:
    """Gauss-Jordan with a tracked transform: ``Q A P = [[I_k, S], [0, 0]]``."""
    if A.m == 0 or A.n == 0:
        raise DimensionError("qap_decompose needs a nonempty matrix")
    m, n = A.shape
    work = [list(r) for r in A.rows]
    track = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    pivots = _gauss_jordan(work, track)
    k = len(pivots)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    columns = tuple(pivots + free)
    p_grid = [[Fraction(0)] * n for _ in range(n)]
    for pos, col in enumerate(columns):
        p_grid[col][pos] = Fraction(1)
    s = Matrix._from_grid([[work[i][j] for j in free] for i in range(k)], k, len(free))
    return QapDecomposition(q=Matrix(track), p=Matrix(p_grid), s=s, rank=k, columns=columns)


def inverse(A: Matrix) -> Matrix:
    if not A.is_square():
        raise DimensionError(f"inverse of a non-square {A.m}x{A.n} matrix")
    d = qap_decompose(A)
    if d.rank < A.n:
        raise NotInvertible(f"matrix has rank {d.rank} < {A.n}")
    # Full rank forces the identity permutation, so Q A = I.
    return d.q


def left_nullspace_basis(A: Matrix) -> Matrix:
    """Rows spanning ``{u : u^T A = 0}``, each a primitive integer vector.

    The result has ``m - rank(A)`` rows; for full row rank it is an empty
    ``0 x m`` matrix.
    """
    d = qap_decompose(A)
    rows = [primitive_integer(d.q.rows[i]) for i in range(d.rank, A.m)]
    return Matrix._from_grid(rows, len(rows), A.m)
