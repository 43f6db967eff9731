"""Exact decisions about monotone and weakly monotone matrices."""

from .certlp import FarkasCertificate, Kind, solve_nonneg, verify_certificate
from .cones import RayList, dd_rays, range_orthant_rays
from .ivt import (
    NoSolution,
    NotApplicable,
    PreconditionViolated,
    QOutcome,
    SandwichFailure,
    SandwichSolution,
    between_solve,
    nonneg_preimage,
    q_nonneg_solve,
    sandwich_preimages,
    shift_to_zero,
)
from .linalg import (
    DimensionError,
    Matrix,
    NotInvertible,
    QapDecomposition,
    Vector,
    inverse,
    left_nullspace_basis,
    leq_vec,
    qap_decompose,
    rank,
)
from .monotonicity import (
    LeftInverseWitness,
    Method,
    MonotonicityReport,
    RightInverseWitness,
    Shortcut,
    is_monotone,
    is_weakly_monotone,
    nonneg_left_inverse,
    nonneg_right_inverse,
    q_nonneg_shortcut,
)

__version__ = "0.1.0"
