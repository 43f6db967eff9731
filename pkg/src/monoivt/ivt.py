"""Order-respecting preimages of linear maps.

Given ``y0 <= y <= y1`` in the range of ``A``, :func:`sandwich_preimages` finds
``x0 <= x <= x1`` with ``A x0 = y0``, ``A x = y`` and ``A x1 = y1``.  The
construction reduces everything to nonnegative preimages of the differences:
take any ``x0``, then add nonnegative ``z2`` with ``A z2 = y - y0`` and
nonnegative ``z3`` with ``A z3 = y1 - y``.  When one of those does not exist
the failing step is reported along with a Farkas certificate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .certlp import FarkasCertificate, solve_nonneg
from .linalg import DimensionError, Matrix, Vector, leq_vec, qap_decompose
from .monotonicity import InternalError, is_monotone


class PreconditionViolated(ValueError):
    """Inputs are out of order or outside the range of the matrix."""


class NoSolution(ValueError):
    """The right-hand side is not in the range of the matrix."""


@dataclass(frozen=True)
class SandwichSolution:
    x0: Vector
    x: Vector
    x1: Vector

    def check(self, A: Matrix, y0: Vector, y: Vector, y1: Vector) -> bool:
        """True iff ``x0 <= x <= x1`` and each point maps to its target."""
        return (
            leq_vec(self.x0, self.x)
            and leq_vec(self.x, self.x1)
            and A @ self.x0 == y0
            and A @ self.x == y
            and A @ self.x1 == y1
        )


@dataclass(frozen=True)
class SandwichFailure:
    step: str  # "z2" or "z3"
    certificate: FarkasCertificate


@dataclass(frozen=True)
class NotApplicable:
    """The matrix is not monotone; ``counterexample`` has ``A x >= 0``, ``x`` not ``>= 0``."""

    counterexample: Vector


class QOutcome(str, enum.Enum):
    INAPPLICABLE = "inapplicable"
    NO_SOLUTION = "no-solution"


def _check_rhs(A: Matrix, b: Vector) -> None:
    if A.m != b.dim:
        raise DimensionError(f"matrix has {A.m} rows but vector has dim {b.dim}")


def nonneg_preimage(A: Matrix, b: Vector) -> Vector | FarkasCertificate:
    """Some ``x >= 0`` with ``A x = b``, else the dual certificate."""
    cert = solve_nonneg(A, b)
    return cert.primal_x if cert.is_primal else cert


def shift_to_zero(A: Matrix, x1: Vector, x2: Vector) -> tuple[Vector, Vector] | FarkasCertificate:
    """Replace ``x2`` so that the pair becomes ordered without moving the images.

    Requires ``A x1 <= A x2``.  Returns ``(x1, x1 + z)`` with ``z >= 0`` and
    ``A z = A (x2 - x1)``, or the certificate that no such ``z`` exists.
    """
    y1, y2 = A @ x1, A @ x2
    if not leq_vec(y1, y2):
        raise PreconditionViolated("A x1 <= A x2 does not hold")
    z = nonneg_preimage(A, y2 - y1)
    if isinstance(z, FarkasCertificate):
        return z
    return x1, x1 + z


def sandwich_preimages(
    A: Matrix, y0: Vector, y: Vector, y1: Vector
) -> SandwichSolution | SandwichFailure:
    for v in (y0, y, y1):
        _check_rhs(A, v)
    if not (leq_vec(y0, y) and leq_vec(y, y1)):
        raise PreconditionViolated("need y0 <= y <= y1")
    d = qap_decompose(A)
    base = d.particular_solution(y0)
    for name, v in (("y0", y0), ("y", y), ("y1", y1)):
        if d.particular_solution(v) is None:
            raise PreconditionViolated(f"{name} is not in the range of A")

    z2 = nonneg_preimage(A, y - y0)
    if isinstance(z2, FarkasCertificate):
        return SandwichFailure("z2", z2)
    z3 = nonneg_preimage(A, y1 - y)
    if isinstance(z3, FarkasCertificate):
        return SandwichFailure("z3", z3)
    x = base + z2
    return SandwichSolution(x0=base, x=x, x1=x + z3)


def between_solve(A: Matrix, x0: Vector, x1: Vector, y: Vector) -> Vector | NotApplicable:
    """Solve ``A x = y`` for monotone ``A``; the answer lands in ``[x0, x1]``.

    Raises:
        PreconditionViolated: unless ``x0 <= x1`` and ``A x0 <= y <= A x1``.
        NoSolution: ``y`` is not in the range of ``A``.
    """
    _check_rhs(A, y)
    if not leq_vec(x0, x1):
        raise PreconditionViolated("need x0 <= x1")
    if not (leq_vec(A @ x0, y) and leq_vec(y, A @ x1)):
        raise PreconditionViolated("need A x0 <= y <= A x1")
    report = is_monotone(A)
    if not report.monotone:
        return NotApplicable(report.counterexample_monotone)
    x = qap_decompose(A).particular_solution(y)
    if x is None:
        raise NoSolution("y is not in the range of A")
    # Monotonicity forces these bounds for any solution.
    if not (leq_vec(x0, x) and leq_vec(x, x1)):
        raise InternalError("solution of a monotone system escaped its bounds")
    return x


def q_nonneg_solve(A: Matrix, b: Vector) -> Vector | QOutcome:
    """Nonnegative solution read straight off the row reduction.

    Works when the transform ``Q`` and the reduced right-hand side are both
    nonnegative; then ``x' = P (Q b restricted to pivots | 0)``.  Returns
    ``QOutcome.NO_SOLUTION`` if ``b`` is outside the range and
    ``QOutcome.INAPPLICABLE`` when the shortcut does not apply.
    """
    _check_rhs(A, b)
    d = qap_decompose(A)
    if not d.q.is_nonneg():
        return QOutcome.INAPPLICABLE
    x = d.particular_solution(b)
    if x is None:
        return QOutcome.NO_SOLUTION
    if not x.is_nonneg():
        return QOutcome.INAPPLICABLE
    return x
