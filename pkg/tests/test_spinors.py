"""q-spinor pairs: commutant spaces, admissibility, equivalence search."""

import pytest

from qgl2.matrices import Mat, span
from qgl2.scalars import GaussRational, Q
from qgl2.spinors import (QSpinorRep, admissibility, check_spinor,
                          q_commutant, spinor_equivalent)


def e(i, j, n=4):
    return Mat.unit(n, i - 1, j - 1)


A_CASE = Mat.diag(Q ** 2, Q, Q, 1)
B_CASE = e(1, 3).scale(Q) - e(2, 4)

J3_LOWER = Mat(((Q ** -1, 1, 0, 0), (0, Q ** -1, 1, 0),
                (0, 0, Q ** -1, 0), (0, 0, 0, 1)))
J3_UPPER = Mat(((Q, 1, 0, 0), (0, Q, 1, 0), (0, 0, Q, 0), (0, 0, 0, 1)))


class TestSpinorPredicate:
    def test_holds(self):
        assert check_spinor(QSpinorRep(A_CASE, B_CASE))

    def test_fails(self):
        assert not check_spinor(QSpinorRep(A_CASE, e(3, 1)))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            QSpinorRep(A_CASE, Mat.identity(3))


class TestQCommutant:
    def test_weighted_diagonal(self):
        assert q_commutant(A_CASE) == span(
            [e(1, 2), e(1, 3), e(2, 4), e(3, 4)])

    def test_weighted_diagonal_reverse(self):
        assert q_commutant(A_CASE, reverse=True) == span(
            [e(2, 1), e(3, 1), e(4, 2), e(4, 3)])

    def test_simple_diagonal_rule(self):
        # a = diag(q,1,1,1): solutions live exactly where the eigenvalue
        # ratio is q
        a = Mat.diag(Q, 1, 1, 1)
        assert q_commutant(a) == span([e(1, 2), e(1, 3), e(1, 4)])

    def test_jordan_blocks(self):
        assert q_commutant(J3_LOWER) == span([e(4, 3)])
        assert q_commutant(J3_LOWER, reverse=True) == span([e(1, 4)])
        assert q_commutant(J3_UPPER) == span([e(1, 4)])
        assert q_commutant(J3_UPPER, reverse=True) == span([e(4, 3)])

    def test_solutions_satisfy_relation(self):
        for x in q_commutant(A_CASE).basis:
            assert A_CASE * x == x.scale(Q) * A_CASE

    def test_numeric_field(self):
        g = GaussRational
        a = Mat([[g(2), g(0)], [g(0), g(1)]])
        sol = q_commutant(a, q=g(2))
        assert sol == span([Mat.unit(2, 0, 1)])


class TestAdmissibility:
    def test_admissible_pair(self):
        w = admissibility(A_CASE, B_CASE)
        assert w.admissible
        assert w.c_space == span([e(2, 1) - e(4, 3)])
        assert w.witness == e(2, 1) - e(4, 3)
        assert w.witness * B_CASE == e(2, 3).scale(Q)

    def test_witness_satisfies_relations(self):
        w = admissibility(A_CASE, B_CASE)
        c = w.witness
        assert c * B_CASE == Q * (B_CASE * c)
        assert c * A_CASE == Q * (A_CASE * c)

    def test_rejected_jordan_pair(self):
        # c_space is nonzero but every member annihilates b
        w = admissibility(J3_LOWER, e(4, 3))
        assert not w.admissible
        assert w.witness is None
        for c in w.c_space.basis:
            assert (c * e(4, 3)).is_zero()

    def test_flipped_orientation(self):
        w = admissibility(A_CASE, B_CASE, orientation="flipped")
        assert w.admissible
        assert w.c_space.dim == 3
        qq = Q.inverse()
        c = w.witness
        assert c * B_CASE == qq * (B_CASE * c)
        assert c * A_CASE == qq * (A_CASE * c)
        assert not (c * B_CASE).is_zero()

    def test_not_a_spinor(self):
        with pytest.raises(ValueError, match="not a q-spinor"):
            admissibility(A_CASE, e(3, 1))

    def test_unknown_orientation(self):
        with pytest.raises(ValueError, match="unknown orientation"):
            admissibility(A_CASE, B_CASE, orientation="sideways")

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            admissibility(A_CASE, Mat.identity(3))


class TestEquivalenceSearch:
    def test_recovers_conjugated_scaled_copy(self):
        u0 = Mat([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 3]])
        ui0 = u0.inverse()
        alpha0 = Q ** 2
        r1 = QSpinorRep(A_CASE, B_CASE)
        r2 = QSpinorRep(u0 * A_CASE * ui0 * alpha0,
                        u0 * B_CASE * ui0 * alpha0)
        found = spinor_equivalent(r1, r2)
        assert found is not None
        u, alpha = found
        assert alpha == alpha0
        ui = u.inverse()
        assert u * r1.a * ui * alpha == r2.a
        assert u * r1.b * ui * alpha == r2.b

    def test_identity_witness(self):
        r = QSpinorRep(A_CASE, B_CASE)
        found = spinor_equivalent(r, r)
        assert found is not None
        u, alpha = found
        assert alpha == Q ** 0
        assert u * r.a * u.inverse() == r.a

    def test_inequivalent_pairs(self):
        r1 = QSpinorRep(A_CASE, B_CASE)
        r2 = QSpinorRep(J3_LOWER, e(4, 3))
        assert spinor_equivalent(r1, r2) is None

    def test_size_mismatch(self):
        r1 = QSpinorRep(Mat.diag(Q, 1), Mat.unit(2, 0, 1))
        r2 = QSpinorRep(A_CASE, B_CASE)
        assert spinor_equivalent(r1, r2) is None

    def test_parameter_mismatch(self):
        r1 = QSpinorRep(A_CASE, B_CASE)
        r2 = QSpinorRep(A_CASE, B_CASE, q=Q ** 2)
        assert spinor_equivalent(r1, r2) is None
