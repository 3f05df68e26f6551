"""16-dimensional exact gamma-matrix algebra and the inner action of
quadruples on it, pinned against golden action tables."""

import json
import pathlib

import pytest

from qgl2.clifford import (BASIS_NAMES, InnerAction, build_action,
                           build_clifford, counit_invariance_space,
                           invariants_from_generators, module_algebra_shadow,
                           seeded_pairs, unitality_ok)
from qgl2.gl2 import GL2Rep
from qgl2.matrices import Mat, span
from qgl2.scalars import GaussRational, ONE, Q, parse_scalar, scalar

GOLDEN = pathlib.Path(__file__).parent / "golden"


def e(i, j, n=4):
    return Mat.unit(n, i - 1, j - 1)


def case1(mu=scalar(1)):
    qi = Q.inverse()
    return GL2Rep(
        Mat.diag(1, qi, 1, qi),
        e(1, 3).scale(Q) - e(2, 4).scale(mu),
        e(2, 1).scale(-mu) + e(4, 3),
        Mat.diag(Q ** 2, Q ** 2, Q, Q) - e(2, 3).scale(Q * mu))


def case2(mu=scalar(1)):
    qi = Q.inverse()
    return GL2Rep(
        Mat.diag(1, 1, qi, qi),
        e(1, 2).scale(Q) + e(3, 4).scale(mu),
        e(3, 1).scale(mu) + e(4, 2),
        Mat.diag(Q ** 2, Q, Q ** 2, Q) + e(3, 2).scale(Q * mu))


class TestAlgebra:
    def test_build_is_cached(self):
        assert build_clifford() is build_clifford()

    def test_signature(self):
        cl = build_clifford()
        ident = Mat.identity(4)
        for mu, sign in enumerate(cl.metric):
            assert cl.gammas[mu] * cl.gammas[mu] == ident.scale(scalar(sign))

    def test_anticommutation(self):
        cl = build_clifford()
        for mu in range(4):
            for nu in range(mu + 1, 4):
                a, b = cl.gammas[mu], cl.gammas[nu]
                assert (a * b + b * a).is_zero()

    def test_basis_names(self):
        assert len(BASIS_NAMES) == 16
        assert BASIS_NAMES[0] == "1"
        assert BASIS_NAMES[1:5] == ("g0", "g1", "g2", "g3")
        assert BASIS_NAMES[-1] == "g0123"

    def test_basis_has_full_rank(self):
        cl = build_clifford()
        assert span(list(cl.elements)).dim == 16

    def test_element_lookup(self):
        cl = build_clifford()
        assert cl.element("1") == Mat.identity(4)
        assert cl.element("g0") == cl.gammas[0]

    def test_coords_of_basis_elements(self):
        cl = build_clifford()
        for k, name in enumerate(cl.names):
            coords = cl.to_coords(cl.element(name))
            assert coords[k] == ONE
            assert all(c == scalar(0) for i, c in enumerate(coords) if i != k)

    def test_grade2_from_product(self):
        # distinct gammas anticommute, so g1*g2 is already antisymmetrized
        cl = build_clifford()
        coords = cl.to_coords(cl.gammas[1] * cl.gammas[2])
        assert coords[cl.index["g12"]] == ONE
        assert sum(1 for c in coords if c != scalar(0)) == 1

    def test_round_trip(self):
        cl = build_clifford()
        coords = [scalar(k - 7) * Q ** (k % 3) for k in range(16)]
        assert list(cl.to_coords(cl.from_coords(coords))) == coords

    def test_dimension_errors(self):
        cl = build_clifford()
        with pytest.raises(ValueError, match="dimension mismatch"):
            cl.to_coords(Mat.identity(3))
        with pytest.raises(ValueError, match="dimension mismatch"):
            cl.from_coords([1, 2, 3])


class TestInnerAction:
    @pytest.mark.parametrize("rep", [case1(), case2()], ids=["a", "b"])
    def test_unitality(self, rep):
        assert unitality_ok(build_action(rep))

    def test_action_undefined(self):
        z = Mat.zero(4)
        with pytest.raises(ValueError, match="action undefined"):
            build_action(GL2Rep(z, z, z, z))

    def test_act_dimension_mismatch(self):
        action = build_action(case1())
        with pytest.raises(ValueError, match="dimension mismatch"):
            action.act(0, 0, Mat.identity(3))

    def test_mstar_inverts_block_matrix(self):
        rep = case1()
        action = build_action(rep)
        # sum_k m[i][k] * mstar[k][j] = delta_ij
        for i in range(2):
            for j in range(2):
                acc = action.m[i][0] * action.mstar[0][j] \
                    + action.m[i][1] * action.mstar[1][j]
                want = Mat.identity(4) if i == j else Mat.zero(4)
                assert acc == want

    @pytest.mark.parametrize("entry", ["perturbed_a", "perturbed_b"])
    def test_golden_action_tables(self, entry):
        cl = build_clifford()
        rep = case1() if entry == "perturbed_a" else case2()
        action = build_action(rep)
        records = json.loads((GOLDEN / f"action_{entry}.json").read_text())
        assert len(records) == 16
        for r in records:
            out = action.act(r["i"], r["j"], cl.element(r["generator"]))
            assert [str(c) for c in cl.to_coords(out)] == r["coords"]

    def test_golden_numeric_consistency(self):
        # re-run one golden record over plain Gaussian rationals at q = 2
        cl = build_clifford()
        rep = case1()
        rep_num = GL2Rep(rep.c11.eval(2), rep.c12.eval(2),
                         rep.c21.eval(2), rep.c22.eval(2),
                         q=GaussRational(2))
        action_num = build_action(rep_num)
        records = json.loads((GOLDEN / "action_perturbed_a.json").read_text())
        r = records[5]
        lhs = action_num.act(r["i"], r["j"],
                             cl.element(r["generator"]).eval(2))
        coords = [parse_scalar(c) for c in r["coords"]]
        assert lhs == cl.from_coords(coords).eval(2)

    def test_seeded_pairs_deterministic(self):
        assert seeded_pairs(3) == seeded_pairs(3)
        assert len(seeded_pairs()) == 20

    def test_module_algebra_shadow_default_pairs(self):
        assert module_algebra_shadow(build_action(case1()))

    def test_module_algebra_shadow_small(self):
        assert module_algebra_shadow(build_action(case2()),
                                     pairs=seeded_pairs(3, seed=1))


class TestInvariants:
    def test_counit_space_matches_centralizer_case1(self):
        rep = case1()
        gens = list(rep.generators()) + [rep.detq().inverse()]
        inv = invariants_from_generators(gens)
        counit = counit_invariance_space(build_action(rep))
        assert counit == inv
        assert counit.dim == 1
        assert counit.contains(Mat.identity(4))

    def test_counit_space_matches_centralizer_diagonal(self):
        two = scalar(2)
        rep = GL2Rep(
            Mat.diag(scalar(1), Q, Q, two),
            Mat.zero(4),
            Mat.zero(4),
            Mat.diag(Q ** 2, ONE, ONE, two.inverse()))
        gens = list(rep.generators()) + [rep.detq().inverse()]
        inv = invariants_from_generators(gens)
        counit = counit_invariance_space(build_action(rep))
        assert counit == inv
        assert counit.dim == 6
