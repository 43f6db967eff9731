import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from monoivt import (
    LeftInverseWitness,
    Matrix,
    Method,
    RightInverseWitness,
    Shortcut,
    Vector,
    is_monotone,
    is_weakly_monotone,
    nonneg_left_inverse,
    nonneg_right_inverse,
    q_nonneg_shortcut,
    solve_nonneg,
    verify_certificate,
)

from monoivt.monotonicity import _first_failing_ray

from conftest import matrices
from oracles import adjugate_inverse

A43 = Matrix([[4, 3], [1, 1]])
SURJ = Matrix([[1, 0, 1], [0, 1, 1]])
DEFICIENT = Matrix([[1, 0, 1], [0, 1, 1], [0, 0, 0]])
FIXTURE3 = Matrix([[1, -1, 4], [-1, 2, -3], [1, -2, 3]])


def check_left_witness(A, w):
    assert isinstance(w, LeftInverseWitness)
    assert (A @ w.y).is_nonneg()
    assert w.y[w.index] < 0
    assert verify_certificate(A.T, Vector.unit(A.n, w.index), w.certificate)


def check_right_witness(A, w):
    assert isinstance(w, RightInverseWitness)
    assert w.certificate.is_dual
    assert verify_certificate(A, Vector.unit(A.m, w.index), w.certificate)


def check_report(A, rep):
    assert rep.weakly_monotone is not None
    if rep.monotone:
        assert rep.weakly_monotone
    assert (rep.left_inverse is None) != (rep.counterexample_monotone is None)
    if rep.left_inverse is not None:
        B = rep.left_inverse
        assert B.is_nonneg() and B @ A == Matrix.identity(A.n)
    else:
        x = rep.counterexample_monotone
        assert (A @ x).is_nonneg() and not x.is_nonneg()
    if rep.right_inverse is not None:
        B = rep.right_inverse
        assert B.is_nonneg() and A @ B == Matrix.identity(A.m)
    if rep.weakly_monotone:
        assert rep.counterexample_weak is None
    else:
        b = rep.counterexample_weak
        assert b.is_nonneg() and not b.is_zero()
        assert rep.counterexample_weak_certificate.is_dual
        assert verify_certificate(A, b, rep.counterexample_weak_certificate)


class TestOneSidedInverses:
    def test_identity(self):
        assert nonneg_left_inverse(Matrix.identity(3)) == Matrix.identity(3)
        assert nonneg_right_inverse(Matrix.identity(3)) == Matrix.identity(3)

    def test_column(self):
        A = Matrix([[1], [1]])
        B = nonneg_left_inverse(A)
        assert B.is_nonneg() and B @ A == Matrix([[1]])

    def test_no_left_inverse(self):
        w = nonneg_left_inverse(A43)
        check_left_witness(A43, w)

    def test_right_inverse_of_surjective_fixture(self):
        B = nonneg_right_inverse(SURJ)
        assert B == Matrix([[1, 0], [0, 1], [0, 0]])
        assert SURJ @ B == Matrix.identity(2)

    def test_all_nonpositive_row(self):
        A = Matrix([[-1, -2]])
        check_right_witness(A, nonneg_right_inverse(A))

    def test_rank_deficient_has_neither(self):
        check_left_witness(DEFICIENT, nonneg_left_inverse(DEFICIENT))
        check_right_witness(DEFICIENT, nonneg_right_inverse(DEFICIENT))


class TestIsMonotone:
    def test_counterexample_4_3(self):
        rep = is_monotone(A43)
        assert not rep.monotone
        x = rep.counterexample_monotone
        assert (A43 @ x).is_nonneg() and not x.is_nonneg()

    def test_identity(self):
        assert is_monotone(Matrix.identity(3)).monotone

    def test_nonnegative_inverse(self):
        rep = is_monotone(Matrix([[2, -1], [-1, 1]]))
        assert rep.monotone
        assert rep.left_inverse == Matrix([[1, 1], [1, 2]])

    def test_tall_monotone(self):
        A = Matrix([[1, 0], [0, 1], [1, -1]])
        rep = is_monotone(A)
        assert rep.monotone and rep.left_inverse @ A == Matrix.identity(2)

    @given(matrices(4, 4).filter(lambda A: A.is_square()))
    @settings(max_examples=80, deadline=None)
    def test_square_agrees_with_inverse_sign(self, A):
        inv = adjugate_inverse(A.rows)
        expected = inv is not None and all(v >= 0 for row in inv for v in row)
        assert is_monotone(A).monotone == expected


class TestIsWeaklyMonotone:
    def test_surjective_fixture(self):
        rep = is_weakly_monotone(SURJ)
        check_report(SURJ, rep)
        assert rep.weakly_monotone and not rep.monotone
        assert rep.method is Method.RIGHT_INVERSE

    def test_rank_deficient_fixture(self):
        rep = is_weakly_monotone(DEFICIENT)
        check_report(DEFICIENT, rep)
        assert rep.weakly_monotone and not rep.monotone
        assert rep.method is Method.RAYS
        assert rep.left_inverse is None and rep.right_inverse is None

    def test_invertible_counterexample(self):
        rep = is_weakly_monotone(A43)
        check_report(A43, rep)
        assert not rep.weakly_monotone and not rep.monotone
        assert rep.method is Method.LEFT_INVERSE
        assert rep.counterexample_weak == Vector([1, 0])

    def test_single_row(self):
        rep = is_weakly_monotone(Matrix([[-1, 2]]))
        assert rep.weakly_monotone and rep.method is Method.SINGLE_ROW
        rep = is_weakly_monotone(Matrix([[-1, -2, 0]]))
        check_report(Matrix([[-1, -2, 0]]), rep)
        assert not rep.weakly_monotone
        assert rep.counterexample_weak == Vector([1])

    def test_zero_matrix(self):
        for shape in ((1, 1), (2, 3), (3, 2)):
            A = Matrix.zeros(*shape)
            rep = is_weakly_monotone(A)
            check_report(A, rep)
            assert rep.weakly_monotone and not rep.monotone
            assert rep.method is Method.ZERO

    def test_deficient_not_weakly_monotone(self):
        # Range is span{(1, -1, 0), (0, 0, 1)}; (0, 0, 1) has no nonnegative preimage.
        A = Matrix([[1, 0, 1], [-1, 0, -1], [0, -1, -1]])
        rep = is_weakly_monotone(A)
        check_report(A, rep)
        assert rep.method is Method.RAYS and not rep.weakly_monotone

    @given(matrices(4, 4))
    @settings(max_examples=120, deadline=None)
    def test_report_invariants(self, A):
        rep = is_weakly_monotone(A)
        check_report(A, rep)
        # Whatever path decided, the general ray test must agree.
        assert (_first_failing_ray(A) is None) == rep.weakly_monotone

    @given(st.lists(st.integers(-5, 5), min_size=1, max_size=6))
    def test_single_row_equivalence(self, row):
        A = Matrix([row])
        expected = any(v > 0 for v in row) or not any(row)
        assert is_weakly_monotone(A).weakly_monotone == expected

    @given(matrices(4, 4), st.randoms(use_true_random=False))
    @settings(max_examples=60, deadline=None)
    def test_sampling_oracle(self, A, rnd):
        """Rejection-sample x on a rational grid with A x >= 0 and re-solve."""
        rep = is_weakly_monotone(A)
        hits = 0
        for _ in range(200):
            x = Vector(Fraction(rnd.randint(-6, 6), rnd.randint(1, 3)) for _ in range(A.n))
            b = A @ x
            if not b.is_nonneg():
                continue
            hits += 1
            if rep.weakly_monotone:
                assert solve_nonneg(A, b).is_primal
            if hits >= 25:
                break
        if not rep.weakly_monotone:
            assert verify_certificate(A, rep.counterexample_weak, rep.counterexample_weak_certificate)


class TestShortcut:
    def test_rank_two_fixture(self):
        assert q_nonneg_shortcut(FIXTURE3) is Shortcut.SUFFICIENT_YES
        assert is_weakly_monotone(FIXTURE3).weakly_monotone

    def test_identity(self):
        assert q_nonneg_shortcut(Matrix.identity(3)) is Shortcut.SUFFICIENT_YES

    def test_negative_q(self):
        assert q_nonneg_shortcut(A43) is Shortcut.INCONCLUSIVE

    def test_inconclusive_but_weakly_monotone(self):
        # Q = [[1, -1], [0, 1]], but B = [[1, 0], [0, 0], [0, 1]] is a nonnegative right inverse.
        A = Matrix([[1, 1, 0], [0, 1, 1]])
        assert q_nonneg_shortcut(A) is Shortcut.INCONCLUSIVE
        assert is_weakly_monotone(A).weakly_monotone

    @given(matrices(4, 4))
    @settings(max_examples=80, deadline=None)
    def test_sufficient_implies_weak(self, A):
        if q_nonneg_shortcut(A) is Shortcut.SUFFICIENT_YES:
            assert is_weakly_monotone(A).weakly_monotone


def test_monotone_implies_weak_on_seeded_sample():
    rnd = random.Random(7)
    for _ in range(60):
        m, n = rnd.randint(1, 4), rnd.randint(1, 4)
        A = Matrix([[rnd.randint(-3, 3) for _ in range(n)] for _ in range(m)])
        rep = is_weakly_monotone(A)
        assert is_monotone(A).monotone == rep.monotone
        if rep.monotone:
            assert rep.weakly_monotone
