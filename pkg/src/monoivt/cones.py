"""Extreme rays of ``{y : R y = 0, y >= 0}`` by double description.

The cone always sits inside the nonnegative orthant, so it is pointed and is
the conic hull of finitely many extreme rays.  :func:`range_orthant_rays`
applies this to ``range(A) = {y : N y = 0}`` with ``N`` a left-nullspace
basis of ``A``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import DimensionError, Matrix, Vector, left_nullspace_basis, primitive_integer, rank


@dataclass(frozen=True)
class RayList:
    ambient_dim: int
    rays: tuple[Vector, ...]

    def __len__(self) -> int:
        return len(self.rays)

    def __iter__(self):
        return iter(self.rays)

    def as_matrix(self) -> Matrix:
        """Rays as the columns of an ``ambient_dim x len(rays)`` matrix."""
        if not self.rays:
            return Matrix.empty(self.ambient_dim, 0)
        return Matrix.from_columns(self.rays)


def _zero_set(ray: tuple[Fraction, ...]) -> frozenset[int]:
    return frozenset(i for i, v in enumerate(ray) if v == 0)


def _adjacent(p, q, equalities: list[tuple[Fraction, ...]], dim: int) -> bool:
    # p, q adjacent iff the constraints tight at both have rank dim - 2.
    common = _zero_set(p) & _zero_set(q)
    if len(common) + len(equalities) < dim - 2:
        return False
    tight = [tuple(Fraction(int(i == j)) for j in range(dim)) for i in sorted(common)]
    tight.extend(equalities)
    if not tight:
        return dim == 2
    return rank(Matrix(tight)) == dim - 2


def dd_rays(R: Matrix, dim: int) -> RayList:
    """Extreme rays of ``{y in Q^dim : R y = 0, y >= 0}``.

    Starts from the orthant's rays ``e_1 .. e_dim`` and intersects with the
    hyperplane of each row of ``R`` in turn.  Rays come back as primitive
    integer vectors, in a deterministic order.
    """
    if dim < 1:
        raise DimensionError("ambient dimension must be positive")
    if R.n != dim:
        raise DimensionError(f"constraint matrix has {R.n} columns, expected {dim}")
    rays = [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    processed: list[tuple[Fraction, ...]] = []
    for row in R.rows:
        if not any(row):
            continue
        vals = [sum((a * b for a, b in zip(row, r)), Fraction(0)) for r in rays]
        zero = [r for r, v in zip(rays, vals) if v == 0]
        pos = [(r, v) for r, v in zip(rays, vals) if v > 0]
        neg = [(r, v) for r, v in zip(rays, vals) if v < 0]
        # Adjacency is judged in the cone before this row is added.
        new = list(zero)
        for p, vp in pos:
            for q, vq in neg:
                if not _adjacent(p, q, processed, dim):
                    continue
                combo = [vp * b - vq * a for a, b in zip(p, q)]
                new.append(tuple(primitive_integer(combo)))
        processed.append(tuple(row))
        rays = new
        if not rays:
            break
    seen: set[tuple[Fraction, ...]] = set()
    out = []
    for r in rays:
        r = tuple(primitive_integer(r))
        if r not in seen:
            seen.add(r)
            out.append(Vector(r))
    return RayList(ambient_dim=dim, rays=tuple(out))


def range_orthant_rays(A: Matrix) -> RayList:
    """Extreme rays of ``range(A)`` intersected with the nonnegative orthant."""
    return dd_rays(left_nullspace_basis(A), A.m)
