"""Exact matrices, canonical subspaces, operator nullspaces, closures."""

from fractions import Fraction

import pytest

from qgl2.matrices import (Mat, MatSpace, centralizer, invertible_element,
                           operator_nullspace, power_traces, span,
                           stacked_nullspace, subalgebra_closure)
from qgl2.scalars import GaussRational, ONE, Q, ZERO, scalar


def e(i, j, n=4):
    return Mat.unit(n, i - 1, j - 1)


class TestMat:
    def test_construction_coercion(self):
        m = Mat([[1, "q"], [Fraction(1, 2), 0]])
        assert m[0, 1] == Q
        assert m[1, 0] == scalar(Fraction(1, 2))

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            Mat([[1, 2], [3]])

    def test_identity_zero_diag_unit(self):
        assert Mat.identity(3)[1, 1] == ONE
        assert Mat.zero(2) == Mat([[0, 0], [0, 0]])
        assert Mat.diag(Q, ONE) == Mat([["q", 0], [0, 1]])
        assert Mat.unit(2, 0, 1) == Mat([[0, 1], [0, 0]])

    def test_arithmetic(self):
        a = Mat([[1, 2], [3, 4]])
        b = Mat([[0, 1], [1, 0]])
        assert a + b == Mat([[1, 3], [4, 4]])
        assert a - a == Mat.zero(2)
        assert a * b == Mat([[2, 1], [4, 3]])
        assert a.scale(Q) == Mat([["q", "2*q"], ["3*q", "4*q"]])
        assert -b == b.scale(scalar(-1))

    def test_unit_products(self):
        assert e(1, 2) * e(2, 3) == e(1, 3)
        assert e(1, 2) * e(3, 4) == Mat.zero(4)

    def test_pow(self):
        n = e(1, 2, 3) + e(2, 3, 3)
        assert n ** 0 == Mat.identity(3)
        assert n ** 2 == e(1, 3, 3)
        assert n ** 3 == Mat.zero(3)

    def test_trace_rank_det(self):
        assert Mat([[1, 2], [2, 4]]).rank() == 1
        assert Mat([[1, 2], [3, 4]]).det() == scalar(-2)
        assert Mat.diag(Q, Q * Q).det() == Q ** 3
        assert Mat.diag(Q, ONE).trace() == Q + ONE

    def test_inverse(self):
        m = Mat([["q", 1], [0, 1]])
        inv = m.inverse()
        assert m * inv == Mat.identity(2)
        assert inv * m == Mat.identity(2)
        assert inv == Mat([["1/q", "-1/q"], [0, 1]])

    def test_singular(self):
        sing = Mat([[1, 1], [1, 1]])
        assert not sing.is_invertible()
        with pytest.raises(ValueError, match="singular"):
            sing.inverse()

    def test_nilpotent_flag(self):
        assert (e(1, 2, 3) + e(2, 3, 3)).is_nilpotent()
        assert Mat.zero(2).is_nilpotent()
        assert not Mat.identity(2).is_nilpotent()
        assert not Mat.diag(Q, ZERO).is_nilpotent()

    def test_nullspace(self):
        ns = Mat([[1, 1], [1, 1]]).nullspace()
        assert len(ns) == 1
        # canonical kernel vector: free coordinate normalized to 1
        assert ns[0] == (scalar(-1), ONE)
        assert Mat.identity(2).nullspace() == []

    def test_flatten_row_major(self):
        m = Mat([[1, 2], [3, 4]])
        assert m.flatten() == [scalar(1), scalar(2), scalar(3), scalar(4)]

    def test_eval(self):
        m = Mat([["q", "1/q"], [0, "q+1"]])
        at2 = m.eval(2)
        assert at2[0, 1] == GaussRational(Fraction(1, 2))
        assert at2[1, 1] == GaussRational(3)
        with pytest.raises(ValueError, match="evaluation pole"):
            m.eval(0)

    def test_json_round_trip(self):
        m = Mat([["q^2", "1/2 + 3*i"], [0, "-q"]])
        assert Mat.from_json(m.to_json()) == m

    def test_gauss_rational_field(self):
        # the same container works over plain Gaussian rationals
        g = GaussRational
        m = Mat([[g(2), g(0, 1)], [g(0), g(1)]])
        assert m.det() == g(2)
        assert (m * m.inverse()) == Mat.identity(2, one=g(1))


class TestMatSpace:
    def test_span_and_dim(self):
        s = span([e(1, 1), e(1, 2), e(1, 1) + e(1, 2)])
        assert s.dim == 2

    def test_canonical_equality(self):
        a = span([e(1, 1) + e(1, 2), e(1, 2)])
        b = span([e(1, 1), e(1, 2)])
        assert a == b
        assert span([e(1, 1).scale(scalar(2))]) == span([e(1, 1)])

    def test_basis_normalized(self):
        s = span([e(2, 2).scale(Q)])
        assert s.basis == [e(2, 2)]

    def test_contains(self):
        s = span([e(1, 1), e(2, 2)])
        assert s.contains(e(1, 1) - e(2, 2).scale(Q))
        assert not s.contains(e(1, 2))

    def test_le(self):
        small = span([e(1, 1)])
        big = span([e(1, 1), e(1, 2)])
        assert small <= big
        assert not big <= small

    def test_empty_space(self):
        s = MatSpace.span([], n=4)
        assert s.dim == 0 and s.basis == []


class TestClosuresAndCommutants:
    def test_subalgebra_closure_sl2_units(self):
        a = Mat.unit(2, 0, 1)
        b = Mat.unit(2, 1, 0)
        c = subalgebra_closure([a, b])
        assert c.dim == 4

    def test_subalgebra_closure_nilpotent_chain(self):
        n = e(1, 2, 3) + e(2, 3, 3)
        c = subalgebra_closure([n])
        assert c.dim == 2
        assert c.contains(n ** 2)

    def test_closure_of_zero(self):
        assert subalgebra_closure([Mat.zero(3)]).dim == 0

    def test_centralizer_of_distinct_diagonal(self):
        d = Mat.diag(1, 2, 3)
        c = centralizer([d])
        assert c.dim == 3
        assert c == span([e(1, 1, 3), e(2, 2, 3), e(3, 3, 3)])

    def test_centralizer_of_identity(self):
        assert centralizer([Mat.identity(3)]).dim == 9

    def test_centralizer_requires_input(self):
        with pytest.raises(ValueError):
            centralizer([])

    def test_operator_nullspace_twist(self):
        # solutions of a*X = q*X*a for a = diag(q, 1) form span{e12}
        a = Mat.diag(Q, ONE)
        sol = operator_nullspace(2, [(a, None, ONE), (None, a, -Q)])
        assert sol == span([Mat.unit(2, 0, 1)])

    def test_stacked_nullspace_intersection(self):
        d = Mat.diag(1, 2)
        ops = [
            [(d, None, ONE), (None, d, -ONE)],       # commute with d
            [(Mat.unit(2, 0, 0), None, ONE)],        # killed by e11 on the left
        ]
        sol = stacked_nullspace(2, ops)
        assert sol == span([Mat.unit(2, 1, 1)])


class TestSearchHelpers:
    def test_power_traces(self):
        m = Mat.diag(Q, ONE)
        assert power_traces(m, 3) == (Q + ONE, Q ** 2 + ONE, Q ** 3 + ONE)

    def test_invertible_element_from_singular_basis(self):
        # every basis element is singular but a combination is not
        s = span([Mat.unit(2, 0, 0), Mat.unit(2, 1, 1)])
        x = invertible_element(s)
        assert x is not None
        assert x.is_invertible()
        assert s.contains(x)

    def test_invertible_element_none(self):
        assert invertible_element(span([Mat.unit(2, 0, 1)])) is None

    def test_invertible_element_deterministic(self):
        s = span([Mat.unit(3, 0, 1), Mat.unit(3, 1, 0), Mat.unit(3, 2, 2)])
        assert invertible_element(s) == invertible_element(s)
