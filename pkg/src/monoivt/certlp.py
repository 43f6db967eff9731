"""Farkas alternative for ``M x = b, x >= 0``.

:func:`solve_nonneg` always returns exactly one of two checkable witnesses:

* a primal ``x >= 0`` with ``M x = b``, or
* a dual ``y`` with ``y^T M >= 0`` and ``y^T b < 0``.

Both come out of a single Phase-I simplex run over exact rationals, using
Bland's rule so degenerate instances cannot cycle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .linalg import DimensionError, Matrix, Vector


class CertificateError(RuntimeError):
    """A freshly built certificate failed its own check.  Always a bug."""


class Kind(str, enum.Enum):
    PRIMAL = "primal"
    DUAL = "dual"


@dataclass(frozen=True)
class FarkasCertificate:
    kind: Kind
    primal_x: Vector | None = None
    dual_y: Vector | None = None

    def __post_init__(self):
        if self.kind is Kind.PRIMAL and (self.primal_x is None or self.dual_y is not None):
            raise ValueError("a primal certificate carries primal_x only")
        if self.kind is Kind.DUAL and (self.dual_y is None or self.primal_x is not None):
            raise ValueError("a dual certificate carries dual_y only")

    @classmethod
    def primal(cls, x: Vector) -> FarkasCertificate:
        return cls(Kind.PRIMAL, primal_x=x)

    @classmethod
    def dual(cls, y: Vector) -> FarkasCertificate:
        return cls(Kind.DUAL, dual_y=y)

    @property
    def is_primal(self) -> bool:
        return self.kind is Kind.PRIMAL

    @property
    def is_dual(self) -> bool:
        return self.kind is Kind.DUAL


def verify_certificate(M: Matrix, b: Vector, cert: FarkasCertificate) -> bool:
    """Check a certificate against ``(M, b)`` by direct substitution."""
    if M.m != b.dim:
        raise DimensionError(f"M has {M.m} rows but b has dim {b.dim}")
    if cert.is_primal:
        x = cert.primal_x
        if x.dim != M.n:
            raise DimensionError(f"primal witness has dim {x.dim}, expected {M.n}")
        return x.is_nonneg() and M @ x == b
    y = cert.dual_y
    if y.dim != M.m:
        raise DimensionError(f"dual witness has dim {y.dim}, expected {M.m}")
    return (M.T @ y).is_nonneg() and y.dot(b) < 0


def solve_nonneg(M: Matrix, b: Vector) -> FarkasCertificate:
    """Decide whether ``M x = b`` has a solution ``x >= 0``.

    Runs Phase I on ``min sum(t)`` s.t. ``D M x + t = |b|``, ``x, t >= 0``,
    where ``D`` flips the rows with ``b_i < 0``.  A zero optimum gives the
    primal witness; otherwise ``y = -D pi`` for the final simplex multipliers
    ``pi`` is a dual witness.

    Raises:
        DimensionError: if ``M.m != b.dim``.
        CertificateError: if the produced certificate does not verify.
    """
    if M.m != b.dim:
        raise DimensionError(f"M has {M.m} rows but b has dim {b.dim}")
    if b.is_zero():
        return FarkasCertificate.primal(Vector.zeros(M.n))

    m, n = M.shape
    sign = [Fraction(-1) if bi < 0 else Fraction(1) for bi in b]
    width = n + m
    # Tableau rows: [coefficients of x | coefficients of t | rhs].
    tab = []
    for i in range(m):
        row = [sign[i] * M[i, j] for j in range(n)]
        row += [Fraction(int(i == j)) for j in range(m)]
        row.append(sign[i] * b[i])
        tab.append(row)
    basis = [n + i for i in range(m)]
    # Reduced costs; artificial cost 1 priced out against the initial basis.
    cost = [-sum(tab[i][j] for i in range(m)) for j in range(n)] + [Fraction(0)] * m
    cost.append(-sum(tab[i][width] for i in range(m)))

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a <= 0:
                continue
            ratio = tab[i][width] / a
            if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                best, leave = ratio, i
        # Phase I is bounded below by 0, so some row must qualify.
        assert leave is not None
        _pivot(tab, cost, leave, enter)
        basis[leave] = enter

    objective = -cost[width]
    if objective == 0:
        x = [Fraction(0)] * n
        for i, var in enumerate(basis):
            if var < n:
                x[var] = tab[i][width]
        cert = FarkasCertificate.primal(Vector(x))
    else:
        # Reduced cost of artificial i is 1 - pi_i.
        pi = [1 - cost[n + i] for i in range(m)]
        cert = FarkasCertificate.dual(Vector(-sign[i] * pi[i] for i in range(m)))
    if not verify_certificate(M, b, cert):
        raise CertificateError(f"{cert.kind.value} certificate failed verification")
    return cert


def _pivot(tab: list[list[Fraction]], cost: list[Fraction], r: int, c: int) -> None:
    piv = tab[r][c]
    if piv != 1:
        tab[r] = [v / piv for v in tab[r]]
    pivot_row = tab[r]
    for i, row in enumerate(tab):
        f = row[c]
        if i != r and f != 0:
            tab[i] = [a - f * p for a, p in zip(row, pivot_row)]
    f = cost[c]
    if f != 0:
        cost[:] = [a - f * p for a, p in zip(cost, pivot_row)]
