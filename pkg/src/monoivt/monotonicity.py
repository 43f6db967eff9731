"""Monotone and weakly monotone matrices.

``A`` is *monotone* when ``A x >= 0`` forces ``x >= 0``, equivalently when it
has a nonnegative left inverse.  ``A`` is *weakly monotone* when every
``b >= 0`` in its range has some preimage ``x' >= 0``.

The analyzers return constructive evidence either way: a nonnegative one-sided
inverse, or a vector together with a Farkas certificate showing why no such
inverse (or preimage) exists.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .certlp import FarkasCertificate, solve_nonneg
from .cones import range_orthant_rays
from .linalg import Matrix, Vector, qap_decompose


class InternalError(RuntimeError):
    """Two decision paths disagreed.  Always a bug."""


class Method(str, enum.Enum):
    ZERO = "zero-matrix"
    SINGLE_ROW = "single-row"
    LEFT_INVERSE = "left-inverse"
    RIGHT_INVERSE = "right-inverse"
    RAYS = "ray-enumeration"


@dataclass(frozen=True)
class LeftInverseWitness:
    """No nonnegative left inverse: ``A @ y >= 0`` while ``y[index] < 0``.

    ``certificate`` is the dual certificate for ``A^T w = e_index, w >= 0``.
    """

    index: int
    y: Vector
    certificate: FarkasCertificate


@dataclass(frozen=True)
class RightInverseWitness:
    """``A x = e_index`` has no solution ``x >= 0``; ``certificate`` proves it."""

    index: int
    certificate: FarkasCertificate


@dataclass(frozen=True)
class MonotonicityReport:
    rank: int
    full_rank: bool
    monotone: bool
    # None when only the monotone question was asked and it came out negative.
    weakly_monotone: bool | None
    method: Method | None = None
    left_inverse: Matrix | None = None
    right_inverse: Matrix | None = None
    counterexample_monotone: Vector | None = None
    counterexample_weak: Vector | None = None
    counterexample_weak_certificate: FarkasCertificate | None = None


def nonneg_left_inverse(A: Matrix) -> Matrix | LeftInverseWitness:
    """Row ``k`` of ``B`` solves ``A^T w = e_k, w >= 0``; first failure wins."""
    rows = []
    for k in range(A.n):
        cert = solve_nonneg(A.T, Vector.unit(A.n, k))
        if cert.is_dual:
            return LeftInverseWitness(index=k, y=cert.dual_y, certificate=cert)
        rows.append(cert.primal_x)
    return Matrix.from_rows(rows)


def nonneg_right_inverse(A: Matrix) -> Matrix | RightInverseWitness:
    """Column ``k`` of ``B`` solves ``A x = e_k, x >= 0``; first failure wins."""
    cols = []
    for k in range(A.m):
        cert = solve_nonneg(A, Vector.unit(A.m, k))
        if cert.is_dual:
            return RightInverseWitness(index=k, certificate=cert)
        cols.append(cert.primal_x)
    return Matrix.from_columns(cols)


def is_monotone(A: Matrix) -> MonotonicityReport:
    """Decide monotonicity through the nonnegative-left-inverse test."""
    k = qap_decompose(A).rank
    left = nonneg_left_inverse(A)
    full = k == min(A.m, A.n)
    if isinstance(left, Matrix):
        return MonotonicityReport(
            rank=k, full_rank=full, monotone=True, weakly_monotone=True,
            method=Method.LEFT_INVERSE, left_inverse=left,
        )
    return MonotonicityReport(
        rank=k, full_rank=full, monotone=False, weakly_monotone=None,
        counterexample_monotone=left.y,
    )


def _first_failing_ray(A: Matrix) -> tuple[Vector, FarkasCertificate] | None:
    for ray in range_orthant_rays(A):
        cert = solve_nonneg(A, ray)
        if cert.is_dual:
            return ray, cert
    return None


def is_weakly_monotone(A: Matrix) -> MonotonicityReport:
    """Full monotonicity report.

    Tries the cheap characterizations first (zero matrix, a single row,
    full rank via one-sided inverses) and falls back to checking that every
    extreme ray of ``range(A) ∩ orthant`` has a nonnegative preimage.  That
    suffices because the set of right-hand sides with a nonnegative preimage
    is itself a convex cone.
    """
    m, n = A.shape
    k = qap_decompose(A).rank
    full = k == min(m, n)

    left = nonneg_left_inverse(A)
    monotone = isinstance(left, Matrix)
    right = nonneg_right_inverse(A) if k == m else None
    right_ok = isinstance(right, Matrix)

    failing = None
    if A.is_zero():
        method, weak = Method.ZERO, True
    elif m == 1:
        method, weak = Method.SINGLE_ROW, any(v > 0 for v in A.rows[0])
    elif full and m >= n:
        method, weak = Method.LEFT_INVERSE, monotone
    elif full:
        method, weak = Method.RIGHT_INVERSE, right_ok
    else:
        method = Method.RAYS
        failing = _first_failing_ray(A)
        weak = failing is None

    if monotone and not weak:
        raise InternalError("monotone matrix reported as not weakly monotone")

    witness = cert = None
    if not weak:
        if failing is None:
            failing = _first_failing_ray(A)
        if failing is None:
            raise InternalError(f"{method.value} path says not weakly monotone but every ray has a preimage")
        witness, cert = failing

    return MonotonicityReport(
        rank=k,
        full_rank=full,
        monotone=monotone,
        weakly_monotone=weak,
        method=method,
        left_inverse=left if monotone else None,
        right_inverse=right if right_ok else None,
        counterexample_monotone=None if monotone else left.y,
        counterexample_weak=witness,
        counterexample_weak_certificate=cert,
    )


class Shortcut(str, enum.Enum):
    SUFFICIENT_YES = "sufficient-yes"
    INCONCLUSIVE = "inconclusive"


def q_nonneg_shortcut(A: Matrix) -> Shortcut:
    """A nonnegative row-reduction transform ``Q`` proves weak monotonicity.

    Only a sufficient test: a negative entry in our ``Q`` says nothing.
    """
    if qap_decompose(A).q.is_nonneg():
        return Shortcut.SUFFICIENT_YES
    return Shortcut.INCONCLUSIVE
