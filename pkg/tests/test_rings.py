"""Ring builders: closed-form shapes, and the Schur-backed Grassmannian
construction against the direct row-reduction path."""

from math import comb

import pytest

from dualcoh import (
    InvalidPresentationError,
    poincare_polynomial,
    polynomial_quotient_algebra,
)
from dualcoh.algebra import _enumerate_monomials
from dualcoh.checks import box_partition_betti, strict_partition_betti
from dualcoh.rings import (
    SchurRing,
    grassmannian_algebra,
    grassmannian_relations,
    lagrangian_algebra,
    lagrangian_relations,
    sp_group_algebra,
    su_algebra,
    su_so_algebra,
)


class TestExteriorBuilders:
    def test_su_degrees(self):
        alg = su_algebra(4)
        assert [g.degree for g in alg.generators] == [3, 5, 7]
        with pytest.raises(InvalidPresentationError):
            su_algebra(1)

    def test_sp_group_degrees(self):
        assert [g.degree for g in sp_group_algebra(3).generators] == [3, 7, 11]

    def test_su_so_degrees(self):
        assert [g.degree for g in su_so_algebra(2).generators] == [5, 9]


class TestLagrangian:
    @pytest.mark.parametrize("g", range(1, 6))
    def test_betti_against_subset_oracle(self, g):
        alg = lagrangian_algebra(g)
        assert poincare_polynomial(alg) == strict_partition_betti(g)
        assert alg.total_dimension == 2 ** g

    def test_g2_relations_match_worked_example(self):
        # spanwise: r_2 = 2 sigma2 - sigma1^2 and r_4 = sigma2^2
        rels = lagrangian_relations(2)
        assert rels == [{(0, 1): 2, (2, 0): -1}, {(0, 2): 1}]

    def test_invalid_rank(self):
        with pytest.raises(InvalidPresentationError):
            lagrangian_algebra(0)


class TestGrassmannian:
    @pytest.mark.parametrize("p,q", [(1, 1), (1, 2), (2, 2), (2, 3), (2, 4),
                                     (3, 3)])
    def test_model_equals_direct_rref(self, p, q):
        gens, rels = grassmannian_relations(p, q)
        direct = polynomial_quotient_algebra(gens, rels, 2 * p * q)
        fast = grassmannian_algebra.uncached(p, q, 200_000, "")
        for d in range(2 * p * q + 1):
            assert direct.basis(d) == fast.basis(d)
        for d in range(0, 2 * p * q + 1, 2):
            for m in _enumerate_monomials(direct._degrees, direct._parities, d):
                assert (direct.normal_form_monomial(m)
                        == fast.normal_form_monomial(m)), (p, q, d, m)

    @pytest.mark.parametrize("p,q", [(1, 2), (2, 3), (3, 4), (2, 5)])
    def test_betti_against_box_oracle(self, p, q):
        alg = grassmannian_algebra(p, q)
        assert poincare_polynomial(alg) == box_partition_betti(p, q)
        assert alg.total_dimension == comb(p + q, p)

    def test_projective_plane_tau_reduction(self):
        alg = grassmannian_algebra(1, 2)
        s1 = alg.gen("sigma1")
        assert alg.gen("tau1") == -s1
        assert alg.gen("tau2") == s1 * s1

    def test_p1_top_class(self):
        # tau_q^p generates the top degree at p = q = 1, with sign -1
        alg = grassmannian_algebra(1, 1)
        assert alg.gen("tau1") == -alg.gen("sigma1")

    def test_invalid_rank(self):
        with pytest.raises(InvalidPresentationError):
            grassmannian_algebra(0, 3)


class TestSchurModel:
    def test_dims_match_partition_counts(self):
        ring = SchurRing(2, 3)
        assert [ring.dims(2 * k) for k in range(7)] == [1, 1, 2, 2, 2, 1, 1]

    def test_vertical_strip_pieri(self):
        ring = SchurRing(3, 3)
        # e_2 * s_(1) = s_(2,1)-column shapes: vertical strips of size 2 on (1)
        out = ring.mult_e({(1,): 1}, 2)
        assert out == {(2, 1): 1, (1, 1, 1): 1}

    def test_horizontal_strip_pieri(self):
        ring = SchurRing(3, 3)
        # h_2 * s_(1) = s_(3) + s_(2,1); sign (-1)^2 = +1
        out = ring.mult_h_signed({(1,): 1}, 2)
        assert out == {(3,): 1, (2, 1): 1}

    def test_box_truncation(self):
        ring = SchurRing(2, 2)
        # e_1 * s_(2,2) leaves the 2x2 box entirely
        assert ring.mult_e({(2, 2): 1}, 1) == {}


def test_grassmannian_cap_refused_at_construction():
    from dualcoh import CapExceededError
    with pytest.raises(CapExceededError):
        grassmannian_algebra.uncached(3, 3, 5, "")
